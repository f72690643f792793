#pragma once

#include "braidlat/model.hpp"

#include <vector>

namespace braidlat {

// lambda values where R - lambda I degenerates: {+1, -1} and the two roots of
// lambda^2 - 3K lambda - (q+1+1/q)K - 1 = 0
std::vector<Complex> cayley_excluded_set(double K, double q);
bool cayley_excluded(Complex lambda, double K, double q, double tol = 1e-8);

struct CayleyResult {
    Complex lambda;
    double theta = 0.0, q = 1.0, K = 0.0;
    NumMatrix X;  // X (R - lambda I) = I
    NumMatrix V;  // -iV = I + 2 lambda X
    double solve_residual = 0.0;        // || X (R - lambda I) - I ||
    double consistency_residual = 0.0;  // || (R - lambda I)(-iV) - (R + lambda I) ||
    double rcond = 0.0;                 // conditioning of R - lambda I
};

// N = 3 only (closed forms exist there); throws std::domain_error when lambda
// is in the excluded set, naming the offending root
CayleyResult inverse_cayley(const ModelParams& p, double theta, Complex lambda);

// the closed-form 9x9 X with entries A..F; agrees with the solver path
NumMatrix closed_form_x(double q, double K, Complex lambda);

struct VRow {
    int a, b, c, d;
    Complex value;
};
// V = sum V_{(ab,cd)} (ab) x (cd); full 81-row table in row-major (a,b,c,d) order
std::vector<VRow> v_coefficient_table(const CayleyResult& res);

}  // namespace braidlat
