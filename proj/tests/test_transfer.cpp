#include "braidlat/symmetry.hpp"

#include <doctest.h>

using namespace braidlat;

namespace {

KPoly kq(int spow) { return KPoly::K(1, SLaurent::s_power(spow)); }

PolyMatrix from_entries(int dim, std::initializer_list<std::tuple<int, int, KPoly>> es) {
    PolyMatrix m(dim);
    for (const auto& [i, j, v] : es) m.set(i, j, v);
    return m;
}

}  // namespace

TEST_SUITE("transfer") {

TEST_CASE("fundamental blocks for N=3 match their displayed forms") {
    const MonodromyBlocks t = t1_blocks(3);
    const KPoly one(1), K = KPoly::K();
    CHECK(t.block(1, 1) == from_entries(3, {{0, 0, one}, {2, 2, K}}));
    CHECK(t.block(1, 2) == from_entries(3, {{1, 0, one}, {2, 1, kq(1)}}));
    CHECK(t.block(1, 3) == from_entries(3, {{2, 0, one + kq(2)}}));
    CHECK(t.block(2, 1) == from_entries(3, {{0, 1, one}, {1, 2, kq(-1)}}));
    CHECK(t.block(2, 2) == from_entries(3, {{1, 1, one + K}}));
    CHECK(t.block(2, 3) == from_entries(3, {{1, 0, kq(1)}, {2, 1, one}}));
    CHECK(t.block(3, 1) == from_entries(3, {{0, 2, one + kq(-2)}}));
    CHECK(t.block(3, 2) == from_entries(3, {{0, 1, kq(-1)}, {1, 2, one}}));
    CHECK(t.block(3, 3) == from_entries(3, {{0, 0, K}, {2, 2, one}}));
}

TEST_CASE("fundamental blocks for N=4, spot entries") {
    const MonodromyBlocks t = t1_blocks(4);
    const KPoly one(1);
    CHECK(t.block(1, 4) == from_entries(4, {{3, 0, one + kq(4)}}));
    CHECK(t.block(4, 1) == from_entries(4, {{0, 3, one + kq(-4)}}));
    CHECK(t.block(1, 2) == from_entries(4, {{1, 0, one}, {3, 2, kq(2)}}));
    CHECK(t.block(2, 4) == from_entries(4, {{2, 0, kq(2)}, {3, 1, one}}));
    CHECK(t.block(3, 4) == from_entries(4, {{1, 0, kq(2)}, {3, 2, one}}));
    CHECK(t.block(2, 2) == from_entries(4, {{1, 1, one}, {2, 2, KPoly::K()}}));
    CHECK(t.block(2, 3) == from_entries(4, {{2, 1, one + KPoly::K()}}));
}

TEST_CASE("order-1 transfer matrix is (1+K) I") {
    for (int N : {3, 4, 5}) {
        const TransferMatrix T = build_transfer(N, 1);
        const KPoly want = KPoly(1) + KPoly::K();
        CHECK(T.m.nnz() == N);
        for (long i = 0; i < N; ++i) CHECK(T.m.at(i, i) == want);
    }
}

TEST_CASE("exact trace identity and step recursion") {
    for (const auto& [N, rmax] : std::vector<std::pair<int, int>>{{3, 5}, {4, 3}, {5, 2}}) {
        const MonodromyBlocks t1 = t1_blocks(N);
        MonodromyBlocks t = t1;
        KPoly prev_trace;
        for (int r = 1; r <= rmax; ++r) {
            if (r > 1) t = coproduct_step(t1, t);
            const TransferMatrix T = transfer_from_blocks(t);
            CHECK(trace_identity_residual(T).is_zero());
            const KPoly tr = transfer_trace(T);
            if (r > 1) CHECK(tr == (KPoly(1) + KPoly::K()) * prev_trace);
            prev_trace = tr;
        }
    }
}

TEST_CASE("every block entry has K-degree at most r") {
    const MonodromyBlocks t1 = t1_blocks(3);
    MonodromyBlocks t = t1;
    for (int r = 2; r <= 4; ++r) {
        t = coproduct_step(t1, t);
        for (const auto& b : t.blocks) CHECK(b.max_k_degree() <= r);
    }
}

TEST_CASE("sparsity audit: block fill stays far below dense") {
    // each row of fundamental blocks holds 2N-1 entries and products never
    // collide, so the hierarchy carries exactly N (2N-1)^r stored entries;
    // (2N-1)^r is well below the dense (N^r)^2 already at small r
    for (int N : {3, 4}) {
        const MonodromyBlocks t1 = t1_blocks(N);
        MonodromyBlocks t = t1;
        long bound = 2 * N - 1;
        for (int r = 1; r <= (N == 3 ? 6 : 4); ++r) {
            if (r > 1) {
                t = coproduct_step(t1, t);
                bound *= 2 * N - 1;
            }
            long blocks_nnz = 0;
            for (const auto& b : t.blocks) blocks_nnz += b.nnz();
            CHECK(blocks_nnz == N * bound);
            const TransferMatrix T = transfer_from_blocks(t);
            CHECK(T.m.nnz() <= bound);
            if (r >= 4) CHECK(T.m.nnz() * 10 < T.m.dim() * T.m.dim());
        }
    }
}

TEST_CASE("order-2 transfer entries follow from the fundamental blocks") {
    // the coupled-pair entry (23),(32) is (1+K)^2: t_32 x t_23 alone feeds it
    const TransferMatrix T = build_transfer(4, 2);
    const KPoly one_plus_k = KPoly(1) + KPoly::K();
    CHECK(T.m.at(1 * 4 + 2, 2 * 4 + 1) == one_plus_k * one_plus_k);
    CHECK(T.m.at(2 * 4 + 1, 1 * 4 + 2) == one_plus_k * one_plus_k);
    // diagonal (22),(22)... entry picks up 2K on top of the permutation part
    CHECK(T.m.at(1 * 4 + 2, 1 * 4 + 2) == KPoly::K(1, SLaurent(2)));
}

TEST_CASE("order-2 N=4 transfer vs its tabulated expansion") {
    // the tabulated expansion (K^2+1)P + 2K(...) + K(q+1/q)(...) + K(q^2+1/q^2)(...)
    // omits 2K[(23)x(32) + (32)x(23)]; the reconciliation pins exactly that
    const int N = 4;
    PolyMatrix tab(16);
    const KPoly K = KPoly::K(), K2p1 = KPoly::K(2) + KPoly(1);
    auto add_term = [&](const KPoly& c, int a, int b, int cc, int d) {
        tab.add((a - 1) * N + (cc - 1), (b - 1) * N + (d - 1), c);
    };
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) add_term(K2p1, i, j, j, i);  // (K^2+1) P
    const KPoly two_k = KPoly::K(1, SLaurent(2));
    add_term(two_k, 1, 1, 4, 4); add_term(two_k, 2, 2, 3, 3);
    add_term(two_k, 3, 3, 2, 2); add_term(two_k, 4, 4, 1, 1);
    const KPoly kqq = KPoly::K(1, SLaurent::s_power(2) + SLaurent::s_power(-2));
    add_term(kqq, 1, 2, 4, 3); add_term(kqq, 1, 3, 4, 2); add_term(kqq, 2, 1, 3, 4);
    add_term(kqq, 2, 4, 3, 1); add_term(kqq, 3, 1, 2, 4); add_term(kqq, 3, 4, 2, 1);
    add_term(kqq, 4, 2, 1, 3); add_term(kqq, 4, 3, 1, 2);
    const KPoly kq2 = KPoly::K(1, SLaurent::s_power(4) + SLaurent::s_power(-4));
    add_term(kq2, 1, 4, 4, 1); add_term(kq2, 4, 1, 1, 4);

    const PolyMatrix diff = build_transfer(4, 2).m - tab;
    REQUIRE(diff.nnz() == 2);
    CHECK(diff.at(1 * 4 + 2, 2 * 4 + 1) == two_k);
    CHECK(diff.at(2 * 4 + 1, 1 * 4 + 2) == two_k);
}

TEST_CASE("transfer matrices commute at distinct spectral parameters") {
    {
        const ModelParams p = ModelParams::create(3, 1.5);
        const TransferMatrix T = build_transfer(3, 3);
        CHECK(commutativity_residual(p, T, -0.4 * p.eta, -0.2 * p.eta) < 1e-9);
        CHECK(commutativity_residual(p, T, -0.3 * p.eta, -0.3 * p.eta) == 0.0);
    }
    {
        const ModelParams p = ModelParams::create(4, 0.8);
        const TransferMatrix T = build_transfer(4, 2);
        CHECK(commutativity_residual(p, T, -0.35 * p.eta, -0.15 * p.eta) < 1e-9);
    }
}

TEST_CASE("state cap guards the coproduct") {
    CHECK_THROWS_AS(build_transfer(3, 4, 50), std::length_error);
}

TEST_CASE("displayed recursions reconcile with the coproduct") {
    CHECK(reconcile_display_recursion(3).empty());
    const auto diffs = reconcile_display_recursion(4);
    REQUIRE(diffs.size() == 1);  // one factor entry printed with a spurious K
    CHECK(diffs[0].i == 3);
    CHECK(diffs[0].k == 4);
    CHECK(diffs[0].row == 4);
    CHECK(diffs[0].col == 3);
    CHECK(diffs[0].displayed == KPoly::K());
    CHECK(diffs[0].constructed == KPoly(1));
}

}  // TEST_SUITE
