#pragma once

#include "braidlat/spectra.hpp"

namespace braidlat {

struct Hamiltonian {
    int N = 0, r = 0;
    double q = 1.0;
    double kdot0 = 0.0;
    NumMatrix m;
};

// sum of r two-site terms, site r+1 wrapped to 1; the local kernel acts on a
// neighboring pair in chain order (chain site k sits at tensor slot r+1-k, so
// in slot order the kernel is P P0' P)
Hamiltonian hamiltonian_sum(const ModelParams& p, int r, std::size_t cap = kDefaultStateCap);

// T0^{-1} kdot0 (dT/dK at K=0), with T0 inverted as the CP permutation and the
// K-derivative taken exactly on the polynomial entries; finite_difference
// switches to a numeric derivative with step 1e-6 (debug path)
Hamiltonian hamiltonian_logderiv(const ModelParams& p, const TransferMatrix& T,
                                 bool finite_difference = false);
Hamiltonian hamiltonian_logderiv(const ModelParams& p, int r, bool finite_difference = false,
                                 std::size_t cap = kDefaultStateCap);

// spins ((N-1)/2, (N-3)/2, ..., -(N-1)/2): sigma_i + sigma_{N+1-i} = 0
std::vector<Rational> spin_assignment(int N);

struct SelectionViolation {
    int in_a = 0, in_b = 0, out_a = 0, out_b = 0;  // pair states
};
// scans the nonzero entries of the two-site generator for pairs whose spins
// do not sum to zero on both sides; expected empty
std::vector<SelectionViolation> selection_rule_audit(const ModelParams& p);

struct HEigenvalue {
    Complex value;      // kdot0 * omega^{r-1} * f1
    double direct_residual = 0.0;  // |H v - value v| / scale against the sum construction
    const SpectralRecord* record = nullptr;
};
std::vector<HEigenvalue> h_eigens_from_records(const std::vector<SpectralRecord>& recs,
                                               const ModelParams& p, const Hamiltonian& H);

Complex trace_h(const Hamiltonian& H);
double max_imag_eigenvalue(const Hamiltonian& H);  // measured, not asserted

// embed a reduced-basis eigenvector into the full N^r space
Eigen::VectorXcd embed_sym_vector(const ReducedBlock& B, const Eigen::VectorXcd& coeffs);

// graph on words: edges flip an adjacent (cyclic) zero-spin pair into another
// zero-spin pair; reports connected components per weight class
struct FlipGraphReport {
    int N = 0, r = 0;
    std::map<int, std::vector<long>> component_sizes;  // weight -> sorted sizes
};
FlipGraphReport flip_graph_report(int N, int r);

}  // namespace braidlat
