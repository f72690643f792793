#include "braidlat/cayley.hpp"

#include "braidlat/braid.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>

namespace braidlat {

std::vector<Complex> cayley_excluded_set(double K, double q) {
    const double c = q + 1.0 + 1.0 / q;
    const Complex disc = std::sqrt(Complex(9.0 * K * K + 4.0 * c * K + 4.0, 0.0));
    return {Complex(1.0, 0.0), Complex(-1.0, 0.0), (3.0 * K + disc) / 2.0, (3.0 * K - disc) / 2.0};
}

bool cayley_excluded(Complex lambda, double K, double q, double tol) {
    for (const Complex& root : cayley_excluded_set(K, q))
        if (std::abs(lambda - root) < tol) return true;
    return false;
}

CayleyResult inverse_cayley(const ModelParams& p, double theta, Complex lambda) {
    if (p.N != 3) throw std::domain_error("inverse_cayley: closed forms exist for N = 3 only");
    CayleyResult res;
    res.lambda = lambda;
    res.theta = theta;
    res.q = p.q;
    res.K = K_of_theta(p, theta);
    const auto excl = cayley_excluded_set(res.K, p.q);
    for (std::size_t i = 0; i < excl.size(); ++i)
        if (std::abs(lambda - excl[i]) < 1e-8)
            throw std::domain_error("inverse_cayley: lambda coincides with excluded root #" +
                                    std::to_string(i) + " = (" + std::to_string(excl[i].real()) +
                                    "," + std::to_string(excl[i].imag()) + ")");
    const NumMatrix R = poly_r(3).eval(p.q, res.K);
    const NumMatrix M = R - lambda * NumMatrix::Identity(9, 9);
    Eigen::FullPivLU<NumMatrix> lu(M);
    res.rcond = lu.rcond();
    res.X = lu.inverse();
    res.solve_residual = (res.X * M - NumMatrix::Identity(9, 9)).cwiseAbs().maxCoeff();
    const NumMatrix minus_iV = NumMatrix::Identity(9, 9) + 2.0 * lambda * res.X;
    res.V = Complex(0.0, 1.0) * minus_iV;
    res.consistency_residual = (M * minus_iV - (R + lambda * NumMatrix::Identity(9, 9))).cwiseAbs().maxCoeff();
    return res;
}

NumMatrix closed_form_x(double q, double K, Complex lambda) {
    NumMatrix X = NumMatrix::Zero(9, 9);
    const Complex lam = lambda;
    const double sq = std::sqrt(q);
    const Complex one_m = 1.0 - lam;
    const Complex one_m2 = 1.0 - lam * lam;
    const Complex D = one_m * (q * lam * lam - 3.0 * q * K * lam - q * q * K - K - q * K - q);
    X(0, 0) = X(8, 8) = 1.0 / one_m;
    X(1, 1) = X(3, 3) = X(5, 5) = X(7, 7) = lam / one_m2;
    X(1, 3) = X(3, 1) = X(5, 7) = X(7, 5) = 1.0 / one_m2;
    const Complex A = q * (lam * lam - lam - 2.0 * K * lam + K) / D;
    const Complex B = (q * lam + 1.0) * sq * K / D;
    const Complex C = q * (lam + q * K * lam - q * K - 1.0 - K) / D;
    const Complex Dv = K * (lam + q) * sq / D;
    const Complex E = (q * lam * lam - 2.0 * K * q * lam - q * q * K - K - q) / D;
    const Complex F = (-q - q * K + q * lam - K + K * lam) / D;
    X(2, 2) = X(6, 6) = A;
    X(2, 4) = X(4, 6) = B;
    X(2, 6) = C;
    X(4, 2) = X(6, 4) = Dv;
    X(4, 4) = E;
    X(6, 2) = F;
    return X;
}

std::vector<VRow> v_coefficient_table(const CayleyResult& res) {
    std::vector<VRow> rows;
    rows.reserve(81);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d)
                    rows.push_back({a, b, c, d, res.V((a - 1) * 3 + (c - 1), (b - 1) * 3 + (d - 1))});
    return rows;
}

}  // namespace braidlat
