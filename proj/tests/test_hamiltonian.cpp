#include "braidlat/hamiltonian.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace braidlat;

TEST_SUITE("hamiltonian") {

TEST_CASE("spectral derivative at the origin") {
    CHECK(kdot0(ModelParams::create(3, 1.0)) == doctest::Approx(-2.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(kdot0(ModelParams::create(4, 1.0)) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    for (int N : {3, 4, 5})
        for (double q : {0.6, 1.0, 1.9}) CHECK(kdot0(ModelParams::create(N, q)) < 0.0);
}

TEST_CASE("two-site chain matches the explicit order-2 forms") {
    const double q = 1.43, sq = std::sqrt(q);
    {
        const ModelParams p = ModelParams::create(3, q);
        const Hamiltonian H = hamiltonian_sum(p, 2);
        const NumMatrix M = H.m / H.kdot0;
        auto at = [&](int a, int b, int c, int d) { return M((a - 1) * 3 + (c - 1), (b - 1) * 3 + (d - 1)).real(); };
        CHECK(at(1, 1, 3, 3) == doctest::Approx(q + 1 / q).epsilon(1e-14));
        CHECK(at(1, 2, 3, 2) == doctest::Approx(sq + 1 / sq).epsilon(1e-14));
        CHECK(at(1, 3, 3, 1) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(at(2, 1, 2, 3) == doctest::Approx(sq + 1 / sq).epsilon(1e-14));
        CHECK(at(2, 2, 2, 2) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(at(2, 3, 2, 1) == doctest::Approx(sq + 1 / sq).epsilon(1e-14));
        CHECK(at(3, 1, 1, 3) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(at(3, 2, 1, 2) == doctest::Approx(sq + 1 / sq).epsilon(1e-14));
        CHECK(at(3, 3, 1, 1) == doctest::Approx(q + 1 / q).epsilon(1e-14));
        CHECK((M.cwiseAbs().array() > 1e-14).count() == 9);
    }
    {
        const ModelParams p = ModelParams::create(4, q);
        const NumMatrix M = hamiltonian_sum(p, 2).m / kdot0(p);
        auto at = [&](int a, int b, int c, int d) { return M((a - 1) * 4 + (c - 1), (b - 1) * 4 + (d - 1)).real(); };
        CHECK(at(1, 1, 4, 4) == doctest::Approx(q * q + 1 / (q * q)).epsilon(1e-14));
        CHECK(at(1, 2, 4, 3) == doctest::Approx(q + 1 / q).epsilon(1e-14));
        CHECK(at(1, 4, 4, 1) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(at(2, 2, 3, 3) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(at(2, 3, 3, 2) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(at(4, 4, 1, 1) == doctest::Approx(q * q + 1 / (q * q)).epsilon(1e-14));
        CHECK((M.cwiseAbs().array() > 1e-14).count() == 16);
    }
    {
        // general-N r=2 coefficient pattern q^{-(rho_i+rho_j)} + q^{rho_i+rho_j}
        const ModelParams p = ModelParams::create(5, q);
        const NumMatrix M = hamiltonian_sum(p, 2).m / kdot0(p);
        const auto rho = make_rho(5);
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                const double e = to_double(rho[i - 1] + rho[j - 1]);
                CHECK(M((i - 1) * 5 + (5 - i), (j - 1) * 5 + (5 - j)).real() ==
                      doctest::Approx(std::pow(q, -e) + std::pow(q, e)).epsilon(1e-13));
            }
    }
}

TEST_CASE("both constructions of the chain Hamiltonian agree") {
    for (const auto& [N, r] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}) {
        const ModelParams p = ModelParams::create(N, 1.43);
        const Hamiltonian Hs = hamiltonian_sum(p, r);
        const Hamiltonian Hl = hamiltonian_logderiv(p, r);
        CHECK((Hs.m - Hl.m).cwiseAbs().maxCoeff() < 1e-10);
    }
    // finite-difference debug path
    const ModelParams p = ModelParams::create(3, 1.43);
    const Hamiltonian Hfd = hamiltonian_logderiv(p, 3, true);
    const Hamiltonian Hs = hamiltonian_sum(p, 3);
    CHECK((Hfd.m - Hs.m).cwiseAbs().maxCoeff() < 1e-5);
    // single site: kdot0 * I from the derivative definition
    const Hamiltonian H1 = hamiltonian_logderiv(p, 1);
    CHECK((H1.m - kdot0(p) * NumMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((hamiltonian_sum(p, 1).m - H1.m).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("order-2 spectrum, trace, and kernel") {
    for (double q : {0.77, 1.0, 2.0}) {
        const ModelParams p = ModelParams::create(3, q);
        const Hamiltonian H = hamiltonian_sum(p, 2);
        const double kd = H.kdot0, qq = q + 1.0 / q;
        Eigen::ComplexEigenSolver<NumMatrix> es(H.m, false);
        std::vector<double> ev;
        for (long i = 0; i < 9; ++i) {
            CHECK(std::abs(es.eigenvalues()(i).imag()) < 1e-12);
            ev.push_back(es.eigenvalues()(i).real());
        }
        std::sort(ev.begin(), ev.end());
        std::vector<double> want{kd * (qq + 4), kd * (qq - 2), 0, 0, 0, 0, 0, 0, 0};
        std::sort(want.begin(), want.end());
        for (int i = 0; i < 9; ++i) CHECK(std::abs(ev[static_cast<std::size_t>(i)] - want[static_cast<std::size_t>(i)]) < 1e-10);
        CHECK(std::abs(trace_h(H) - 2.0 * kd * (qq + 1.0)) < 1e-10);
    }
}

TEST_CASE("eigenvalue extraction from transfer records matches direct action") {
    for (const auto& [N, r] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        const ModelParams p = ModelParams::create(N, 1.37);
        const Hamiltonian H = hamiltonian_sum(p, r);
        const auto recs = spectrum_records(p, r);
        Complex sum = 0.0;
        for (const auto& he : h_eigens_from_records(recs, p, H)) {
            CHECK(he.direct_residual < 1e-8);
            sum += static_cast<double>(he.record->multiplicity) * he.value;
            // annihilated classes: n in {r, r+1, (N+1)r-1, (N+1)r}
            const int n = he.record->n;
            if (n == r || n == r + 1 || n == (N + 1) * r - 1 || n == (N + 1) * r)
                CHECK(std::abs(he.value) < 1e-10);
        }
        CHECK(std::abs(sum - trace_h(H)) < 1e-8);  // trace consistency
    }
}

TEST_CASE("kernel contains the four annihilated weight classes") {
    const int N = 3, r = 3;
    const ModelParams p = ModelParams::create(N, 1.55);
    const Hamiltonian H = hamiltonian_sum(p, r);
    const TransferMatrix T = build_transfer(N, r);
    long expected_kernel = 0;
    for (int n : {r, r + 1, 3 * r - 1, 3 * r}) {
        expected_kernel += subspace_dim(N, r, n);
        for (int k = 0; k < r; ++k) {
            const ReducedBlock B = reduced_block(T, n, RootOfUnity(k, r), p.q, true);
            for (long c = 0; c < B.dim(); ++c) {
                Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(B.dim());
                unit(c) = 1.0;
                CHECK((H.m * embed_sym_vector(B, unit)).norm() < 1e-9);
            }
        }
    }
    Eigen::ComplexEigenSolver<NumMatrix> es(H.m, false);
    long zeros = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i)) < 1e-9) ++zeros;
    CHECK(zeros >= expected_kernel);
}

TEST_CASE("commutes with weight and circular permutation") {
    const ModelParams p = ModelParams::create(3, 1.62);
    const Hamiltonian H = hamiltonian_sum(p, 3);
    NumMatrix W = NumMatrix::Zero(27, 27);
    for (long i = 0; i < 27; ++i) W(i, i) = word_weight(index_to_word(i, 3, 3));
    CHECK((H.m * W - W * H.m).cwiseAbs().maxCoeff() < 1e-10);
    const NumMatrix CP = cp_matrix(3, 3).eval(p.q, 0.0);
    CHECK((H.m * CP - CP * H.m).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(max_imag_eigenvalue(H) < 1e-9);  // measured, not asserted by the model
}

TEST_CASE("selection rules: only zero-spin pairs couple") {
    CHECK(spin_assignment(3) == std::vector<Rational>{{1}, {0}, {-1}});
    CHECK(spin_assignment(4) == std::vector<Rational>{{3, 2}, {1, 2}, {-1, 2}, {-3, 2}});
    for (int N : {3, 4, 5}) {
        const ModelParams p = ModelParams::create(N, 1.3);
        CHECK(selection_rule_audit(p).empty());
    }
    // allowed N=3 pairs are exactly (+-), (00), (-+)
    const PolyMatrix gen = poly_p0prime(3);
    std::set<std::pair<int, int>> pairs;
    gen.for_each([&](long row, long, const KPoly&) {
        pairs.insert({static_cast<int>(row / 3) + 1, static_cast<int>(row % 3) + 1});
    });
    CHECK(pairs == std::set<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 1}});
}

TEST_CASE("flip propagation connects each central class") {
    const FlipGraphReport rep = flip_graph_report(3, 4);
    // weight 4: the all-ones word has no flippable pair
    CHECK(rep.component_sizes.at(4) == std::vector<long>{1});
    // weight 8: the four words with separated 2s (1232 and rotations) carry no
    // adjacent zero-spin pair and stay frozen; the other 15 all connect
    CHECK(rep.component_sizes.at(8) == std::vector<long>{1, 1, 1, 1, 15});
    // a zero-spin pair regenerates: the alternating word reaches the uniform one
    const auto& s8 = rep.component_sizes.at(8);
    CHECK(s8.back() == 15);
}

}  // TEST_SUITE
