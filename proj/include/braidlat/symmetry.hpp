#pragma once

#include "braidlat/transfer.hpp"
#include "braidlat/words.hpp"

#include <optional>

namespace braidlat {

// left rotation |a1 a2 .. ar> -> |a2 .. ar a1> as a flat-index map:
// cp[j] = index of the rotated word
std::vector<long> cp_index_map(int N, int r);
PolyMatrix cp_matrix(int N, int r);

struct SymmetryViolation {
    long row = 0, col = 0;
    std::string kind;  // "weight" or "cp"
    KPoly entry;
    KPoly other;  // for cp: the mismatched image entry
};

// exact symbolic checks that T preserves weight classes and commutes with the
// circular permutation; nullopt when clean
std::optional<SymmetryViolation> check_weight_invariance(const TransferMatrix& T);
std::optional<SymmetryViolation> check_cp_commutation(const TransferMatrix& T);

// exact check T(K=0) == CP as permutation matrices
bool transfer_at_zero_is_cp(const TransferMatrix& T);

// T restricted to the (n, omega) symmetrized basis; entries are polynomials in
// K with complex coefficients (exact q-coefficients evaluated at numeric q,
// exact omega phases). Construction throws if the exact weight/CP checks fail.
struct ReducedBlock {
    int N = 0, r = 0, n = 0;
    RootOfUnity omega;            // canonical k/r reduced
    double q = 1.0;
    std::vector<CPOrbit> basis;   // ordered by representative
    std::vector<NumMatrix> kc;    // kc[j] = coefficient matrix of K^j, j=0..r

    long dim() const { return basis.empty() ? 0 : static_cast<long>(basis.size()); }
    NumMatrix eval(Complex K) const;
};

// Skips the exact checks when `checked` (caller has already validated T).
ReducedBlock reduced_block(const TransferMatrix& T, int n, const RootOfUnity& omega, double q,
                           bool checked = false);

// all (n, omega) keys with a nonempty block for given (N, r)
std::vector<std::pair<int, RootOfUnity>> block_keys(int N, int r);

// Hausdorff distance between eigenvalue sets of block(n, omega; q) and
// block((N+1)r - n, omega; 1/q), maximized over a K grid
double conjugate_pairing_residual(const TransferMatrix& Tq, const TransferMatrix& Tqinv, int n,
                                  const RootOfUnity& omega, double q,
                                  const std::vector<double>& K_grid);

}  // namespace braidlat
