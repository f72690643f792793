#include "braidlat/model.hpp"

#include <cmath>
#include <stdexcept>

namespace braidlat {

std::vector<Rational> make_rho(int N) {
    if (N < 3) throw std::domain_error("make_rho: N >= 3 required");
    std::vector<Rational> rho;
    rho.reserve(static_cast<std::size_t>(N));
    if (N % 2 == 1) {
        int n = (N - 1) / 2;
        for (int k = n; k >= 1; --k) rho.emplace_back(2 * k - 1, 2);
        rho.emplace_back(0);
        for (int k = 1; k <= n; ++k) rho.emplace_back(-(2 * k - 1), 2);
    } else {
        int n = N / 2;
        for (int k = n - 1; k >= 1; --k) rho.emplace_back(k);
        rho.emplace_back(0);
        rho.emplace_back(0);
        for (int k = 1; k <= n - 1; ++k) rho.emplace_back(-k);
    }
    return rho;
}

SLaurent bracket_n_minus_1_plus_1(int N) {
    // [m] = q^{m-1} + q^{m-3} + ... + q^{-m+1}
    SLaurent b(1);
    int m = N - 1;
    for (int e = m - 1; e >= -(m - 1); e -= 2) b += SLaurent::s_power(2 * e);
    return b;
}

double make_eta(int N, double q) {
    if (!(q > 0)) throw std::domain_error("make_eta: q > 0 required");
    const double c = bracket_n_minus_1_plus_1(N).eval(q);
    if (!(c > 2.0))
        throw std::domain_error("make_eta: [N-1]+1 = " + std::to_string(c) +
                                " <= 2, no positive eta exists");
    return std::log((c + std::sqrt(c * c - 4.0)) / 2.0);
}

ModelParams ModelParams::create(int N, double q) {
    ModelParams p;
    p.N = N;
    p.q = q;
    p.rho = make_rho(N);
    p.eta = make_eta(N, q);
    return p;
}

double K_of_theta(const ModelParams& p, double theta) {
    const double denom = std::sinh(p.eta + theta);
    if (std::abs(denom) < 1e-14)
        throw std::domain_error("K_of_theta: pole at theta = -eta");
    return -std::sinh(theta) / denom;
}

double kdot0(const ModelParams& p) { return -1.0 / std::sinh(p.eta); }

}  // namespace braidlat
