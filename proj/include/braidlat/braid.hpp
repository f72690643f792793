#pragma once

#include "braidlat/model.hpp"

namespace braidlat {

// P0' = sum_{ij} q^{-(rho_i+rho_j)} (ij) x (i'j'), i' = N+1-i.
// Exactly N^2 nonzero entries; satisfies P0'^2 = ([N-1]+1) P0'.
PolyMatrix poly_p0prime(int N);

// permutation P = sum (ij) x (ji)
PolyMatrix poly_perm(int N);

// braid matrix R^(theta) = I + K * P0' with K formal
PolyMatrix poly_rhat(int N);

// Yang-Baxter matrix R = P * R^
PolyMatrix poly_r(int N);

// exact residual of the projector identity P0'^2 - ([N-1]+1) P0'
PolyMatrix p0prime_projector_residual(int N);

// max-norm residual of R^_12(th) R^_23(th+th') R^_12(th') =
// R^_23(th') R^_12(th+th') R^_23(th) on the N^3 space
double ybe_residual(const ModelParams& p, double theta, double theta_p);

// R^(theta) R^(-theta) should be a scalar multiple of I; returns
// {scalar, off-identity residual}
struct UnitarityCheck {
    Complex scalar;
    double residual;
};
UnitarityCheck rhat_unitarity(const ModelParams& p, double theta);

}  // namespace braidlat
