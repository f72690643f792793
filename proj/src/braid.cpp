#include "braidlat/braid.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace braidlat {

PolyMatrix poly_p0prime(int N) {
    const auto rho = make_rho(N);
    PolyMatrix m(static_cast<long>(N) * N);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            const int ip = N + 1 - i, jp = N + 1 - j;
            const long row = static_cast<long>(i - 1) * N + (ip - 1);
            const long col = static_cast<long>(j - 1) * N + (jp - 1);
            m.set(row, col, KPoly(SLaurent::q_power(-(rho[static_cast<std::size_t>(i - 1)] +
                                                      rho[static_cast<std::size_t>(j - 1)]))));
        }
    }
    return m;
}

PolyMatrix poly_perm(int N) {
    PolyMatrix m(static_cast<long>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) m.set(static_cast<long>(b) * N + a, static_cast<long>(a) * N + b, KPoly(1));
    return m;
}

PolyMatrix poly_rhat(int N) {
    return PolyMatrix::identity(static_cast<long>(N) * N) + poly_p0prime(N).scaled(KPoly::K());
}

PolyMatrix poly_r(int N) { return poly_perm(N) * poly_rhat(N); }

PolyMatrix p0prime_projector_residual(int N) {
    PolyMatrix p0 = poly_p0prime(N);
    return p0 * p0 - p0.scaled(KPoly(bracket_n_minus_1_plus_1(N)));
}

double ybe_residual(const ModelParams& p, double theta, double theta_p) {
    const int N = p.N;
    const PolyMatrix rhat = poly_rhat(N);
    auto R = [&](double th) { return rhat.eval(p.q, K_of_theta(p, th)); };
    const NumMatrix I1 = NumMatrix::Identity(N, N);
    auto embed12 = [&](const NumMatrix& m) { return Eigen::kroneckerProduct(m, I1).eval(); };
    auto embed23 = [&](const NumMatrix& m) { return Eigen::kroneckerProduct(I1, m).eval(); };
    const NumMatrix A = embed12(R(theta)) * embed23(R(theta + theta_p)) * embed12(R(theta_p));
    const NumMatrix B = embed23(R(theta_p)) * embed12(R(theta + theta_p)) * embed23(R(theta));
    return (A - B).cwiseAbs().maxCoeff();
}

UnitarityCheck rhat_unitarity(const ModelParams& p, double theta) {
    const PolyMatrix rhat = poly_rhat(p.N);
    const NumMatrix M = rhat.eval(p.q, K_of_theta(p, theta)) * rhat.eval(p.q, K_of_theta(p, -theta));
    const long dim = M.rows();
    const Complex scalar = M.trace() / static_cast<double>(dim);
    return {scalar, (M - scalar * NumMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff()};
}

}  // namespace braidlat
