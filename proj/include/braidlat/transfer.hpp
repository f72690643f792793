#pragma once

#include "braidlat/braid.hpp"

#include <optional>

namespace braidlat {

inline constexpr std::size_t kDefaultStateCap = 60000;

// N x N array of operator blocks t^{(r)}_{ij}, each N^r x N^r with K-degree <= r
struct MonodromyBlocks {
    int N = 0;
    int r = 0;
    std::vector<PolyMatrix> blocks;  // (i-1)*N + (j-1), 1-based i,j

    const PolyMatrix& block(int i, int j) const {
        return blocks[static_cast<std::size_t>(i - 1) * N + (j - 1)];
    }
    PolyMatrix& block(int i, int j) {
        return blocks[static_cast<std::size_t>(i - 1) * N + (j - 1)];
    }
    long dim() const { return blocks.empty() ? 0 : blocks.front().dim(); }
};

// fundamental blocks: t_ab = (ba) + K q^{-(rho_{a'}+rho_b)} (a'b')
MonodromyBlocks t1_blocks(int N);

// t^{(r+1)}_{ij} = sum_k t^{(1)}_{ik} kron t^{(r)}_{kj}; throws on cap overflow
// or if any entry exceeds K-degree r+1
MonodromyBlocks coproduct_step(const MonodromyBlocks& t1, const MonodromyBlocks& t,
                               std::size_t cap = kDefaultStateCap);

struct TransferMatrix {
    int N = 0;
    int r = 0;
    PolyMatrix m;
};

MonodromyBlocks build_monodromy(int N, int r, std::size_t cap = kDefaultStateCap);
TransferMatrix build_transfer(int N, int r, std::size_t cap = kDefaultStateCap);
TransferMatrix transfer_from_blocks(const MonodromyBlocks& t);

KPoly transfer_trace(const TransferMatrix& T);
// exact check Tr T^{(r)} = N (1+K)^r; returns the (zero) difference
KPoly trace_identity_residual(const TransferMatrix& T);
KPoly one_plus_k_power(int N, int r);

// numeric commutator residual ||[T(th), T(th')]||_max / max(1, ||T|| ||T'||)
double commutativity_residual(const ModelParams& p, const TransferMatrix& T, double theta,
                              double theta_p);

// Reconciliation of the displayed block recursions against the coproduct
// expansion: each display encodes claims about the fundamental factors; any
// factor entry that differs from t^{(1)} is reported, never silently fixed.
struct RecursionDiscrepancy {
    int i = 0, k = 0;    // claimed factor t_{ik}
    int row = 0, col = 0;  // entry within the N x N factor, 1-based
    KPoly displayed;
    KPoly constructed;
};
std::vector<RecursionDiscrepancy> reconcile_display_recursion(int N);  // N = 3 or 4

}  // namespace braidlat
