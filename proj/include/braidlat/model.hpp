#pragma once

#include "braidlat/poly_matrix.hpp"
#include "braidlat/rational.hpp"

#include <vector>

namespace braidlat {

// (rho_1..rho_N): half-integers, antisymmetric under i -> N+1-i; even N has two zeros
std::vector<Rational> make_rho(int N);

// [m] = (q^m - q^{-m})/(q - q^{-1}) + ... as an exact SLaurent: [N-1]+1
SLaurent bracket_n_minus_1_plus_1(int N);

// eta > 0 solving 2*cosh(eta) = [N-1]+1 at q; throws std::domain_error if the
// right side is <= 2
double make_eta(int N, double q);

struct ModelParams {
    int N = 3;
    double q = 1.0;
    std::vector<Rational> rho;
    double eta = 0.0;

    static ModelParams create(int N, double q);
};

// K(theta) = -sinh(theta)/sinh(eta+theta); pole at theta = -eta
double K_of_theta(const ModelParams& p, double theta);

// dK/dtheta at theta=0: -1/sinh(eta)
double kdot0(const ModelParams& p);

}  // namespace braidlat
