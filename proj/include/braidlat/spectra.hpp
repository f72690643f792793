#pragma once

#include "braidlat/symmetry.hpp"

namespace braidlat {

// one eigenbranch of a reduced block at fixed q
struct SpectralRecord {
    int N = 0, r = 0, n = 0;
    RootOfUnity omega;
    double q = 1.0;
    std::vector<Complex> f;         // f0..fr, eigenvalue = sum f_j K^j
    Eigen::VectorXcd eigvec;        // components over the (n, omega) sym-basis
    int multiplicity = 1;
    std::vector<std::string> basis; // orbit representative words
};

struct FitOptions {
    double first_K = 0.15;
    double step_K = 0.20;
    double holdout_tol = 1e-8;     // residual bound at the 2 held-out samples
    double overlap_floor = 0.5;    // branch-matching sanity bound
    double merge_tol = 1e-8;       // coefficient distance for multiplicity merge
};

// degree-exact interpolation through the first degree+1 samples, residual
// checked at the remaining samples; throws on holdout failure
std::vector<Complex> fit_k_polynomial(const std::vector<double>& Ks,
                                      const std::vector<Complex>& vals, int degree,
                                      double holdout_tol = 1e-8);

// diagonalize at r+3 sampled K, match branches by eigenvector overlap, fit
// each branch, merge degenerate branches into multiplicity
std::vector<SpectralRecord> diagonalize_block(const ReducedBlock& B, const FitOptions& opt = {});

// all records for (N, r) at parameter q (optionally restricted)
std::vector<SpectralRecord> spectrum_records(const ModelParams& p, int r,
                                             std::optional<int> n_filter = std::nullopt,
                                             std::optional<RootOfUnity> omega_filter = std::nullopt,
                                             std::size_t cap = kDefaultStateCap);
std::vector<SpectralRecord> spectrum_records(const ModelParams& p, const TransferMatrix& T,
                                             std::optional<int> n_filter = std::nullopt,
                                             std::optional<RootOfUnity> omega_filter = std::nullopt);

// sum of eigenvalue polynomials over records, weighted by multiplicity
std::vector<Complex> records_sum(const std::vector<SpectralRecord>& recs, int r);
// coefficient-wise residual of the global sum rule sum = N (1+K)^r
double global_sum_residual(const std::vector<SpectralRecord>& recs, int N, int r);
// sum restricted to one weight class
std::vector<Complex> subspace_trace(const std::vector<SpectralRecord>& recs, int n, int r);

// max |f0 - omega| over records
double f0_omega_residual(const std::vector<SpectralRecord>& recs);

// eigenvector K-independence: for each branch group, spectral-projector
// distance between K1 and K2 (non-normal safe: uses left/right eigenvectors)
double projector_overlap_residual(const ReducedBlock& B, double K1 = 0.3, double K2 = 0.7);

// inner product in the unnormalized basis convention: <u|v> weighted by
// orbit periods (|v_omega|^2 = period)
Complex period_weighted_dot(const ReducedBlock& B, const Eigen::VectorXcd& u,
                            const Eigen::VectorXcd& v);

}  // namespace braidlat
