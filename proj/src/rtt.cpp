#include "braidlat/rtt.hpp"

#include "braidlat/braid.hpp"

#include <array>
#include <cmath>

namespace braidlat {

namespace {

struct BlockRef {
    int i, j;
    bool primed;
    BlockRef transposed_swapped() const { return {j, i, !primed}; }
};

// q^{spow/2} * t(f1) * t(f2)
struct ProdTerm {
    int spow;
    BlockRef f1, f2;
};

using TermSum = std::vector<ProdTerm>;

// q^{spow/2} (t_x t'_y - t'_x t_y)
struct Diff {
    int spow;
    std::pair<int, int> x, y;
};

struct RelationSet {
    std::string name;
    std::array<Diff, 3> lhs;
    TermSum inter;  // the X_i / Y_i combination
    int rhs_sign;   // lhs = rhs_sign * K'' * inter
};

TermSum x_intermediate(int a, int b) {
    return {{-1, {1, a, false}, {3, b, true}},
            {0, {2, a, false}, {2, b, true}},
            {+1, {3, a, false}, {1, b, true}}};
}

TermSum transpose_swap(const TermSum& in) {
    TermSum out;
    for (const auto& t : in) out.push_back({t.spow, t.f1.transposed_swapped(), t.f2.transposed_swapped()});
    return out;
}

RelationSet make_x_set(int a, int b) {
    RelationSet s;
    s.name = "X" + std::to_string(3 * (a - 1) + b);
    s.lhs = {Diff{+1, {1, a}, {3, b}}, Diff{0, {2, a}, {2, b}}, Diff{-1, {3, a}, {1, b}}};
    s.inter = x_intermediate(a, b);
    s.rhs_sign = -1;
    return s;
}

RelationSet make_y_set(int a, int b) {
    // generated from the X-set by transposing block indices (and the
    // theta/theta' order inside the intermediates); sign of K'' flips
    RelationSet x = make_x_set(a, b);
    RelationSet s;
    s.name = "Y" + std::to_string(3 * (a - 1) + b);
    for (std::size_t k = 0; k < 3; ++k) {
        const Diff& d = x.lhs[k];
        s.lhs[k] = Diff{d.spow,
                        {d.x.second, d.x.first},
                        {d.y.second, d.y.first}};
    }
    s.inter = transpose_swap(x.inter);
    s.rhs_sign = +1;
    return s;
}

}  // namespace

RttReport rtt_verify(const ModelParams& p, int r, double theta, double theta_p, std::size_t cap) {
    RttReport rep;
    rep.N = p.N;
    rep.r = r;
    rep.q = p.q;
    rep.theta = theta;
    rep.theta_p = theta_p;
    rep.K_pp = K_of_theta(p, theta - theta_p);  // throws on the pole
    const double Kt = K_of_theta(p, theta);
    const double Ktp = K_of_theta(p, theta_p);
    const int N = p.N;

    const MonodromyBlocks blocks = build_monodromy(N, r, cap);
    std::vector<NumMatrix> t(static_cast<std::size_t>(N) * N), tp(static_cast<std::size_t>(N) * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            t[static_cast<std::size_t>(i - 1) * N + (j - 1)] = blocks.block(i, j).eval(p.q, Kt);
            tp[static_cast<std::size_t>(i - 1) * N + (j - 1)] = blocks.block(i, j).eval(p.q, Ktp);
        }
    auto T = [&](const BlockRef& f) -> const NumMatrix& {
        return (f.primed ? tp : t)[static_cast<std::size_t>(f.i - 1) * N + (f.j - 1)];
    };
    auto Tat = [&](int i, int j, bool primed) -> const NumMatrix& {
        return T(BlockRef{i, j, primed});
    };
    const double sq = std::sqrt(p.q);
    auto spow = [&](int e) { return std::pow(sq, e); };

    if (N == 3) {
        // 36 relations t_ij t'_kl = t'_ij t_kl
        static const std::pair<int, int> kl_table[9][4] = {
            {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, {{1, 1}, {1, 3}, {2, 1}, {2, 3}},
            {{1, 2}, {1, 3}, {2, 2}, {2, 3}}, {{1, 1}, {1, 2}, {3, 1}, {3, 2}},
            {{1, 1}, {1, 3}, {3, 1}, {3, 3}}, {{1, 2}, {1, 3}, {3, 2}, {3, 3}},
            {{2, 1}, {2, 2}, {3, 1}, {3, 2}}, {{2, 1}, {2, 3}, {3, 1}, {3, 3}},
            {{2, 2}, {2, 3}, {3, 2}, {3, 3}}};
        for (int ij = 0; ij < 9; ++ij) {
            const int i = ij / 3 + 1, j = ij % 3 + 1;
            for (const auto& [k, l] : kl_table[ij]) {
                const double res =
                    (Tat(i, j, false) * Tat(k, l, true) - Tat(i, j, true) * Tat(k, l, false))
                        .cwiseAbs()
                        .maxCoeff();
                rep.k_independent_max = std::max(rep.k_independent_max, res);
                rep.details.push_back({"t" + std::to_string(i) + std::to_string(j) + "*t'" +
                                           std::to_string(k) + std::to_string(l),
                                       res});
            }
        }

        auto eval_sum = [&](const TermSum& sum) {
            NumMatrix acc = NumMatrix::Zero(t[0].rows(), t[0].cols());
            for (const auto& term : sum) acc += spow(term.spow) * (T(term.f1) * T(term.f2));
            return acc;
        };
        auto check_set = [&](const RelationSet& s, double& bucket) {
            const NumMatrix inter = eval_sum(s.inter);
            const NumMatrix rhs = (s.rhs_sign * rep.K_pp) * inter;
            for (const auto& d : s.lhs) {
                const NumMatrix lhs =
                    spow(d.spow) * (Tat(d.x.first, d.x.second, false) * Tat(d.y.first, d.y.second, true) -
                                    Tat(d.x.first, d.x.second, true) * Tat(d.y.first, d.y.second, false));
                const double res = (lhs - rhs).cwiseAbs().maxCoeff();
                bucket = std::max(bucket, res);
                rep.details.push_back({s.name + " line", res});
            }
        };
        static const std::pair<int, int> set_keys[6] = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}};
        for (const auto& [a, b] : set_keys) check_set(make_x_set(a, b), rep.x_set_max);
        for (const auto& [a, b] : set_keys) check_set(make_y_set(a, b), rep.y_set_max);

        // mixed relations: lhs (x, y); rhs = -K''(c1 q^{e1/2} X_i - c2 q^{e2/2} Y_j)
        const NumMatrix X3 = eval_sum(x_intermediate(1, 3));
        const NumMatrix X5 = eval_sum(x_intermediate(2, 2));
        const NumMatrix X7 = eval_sum(x_intermediate(3, 1));
        const NumMatrix Y3 = eval_sum(transpose_swap(x_intermediate(1, 3)));
        const NumMatrix Y5 = eval_sum(transpose_swap(x_intermediate(2, 2)));
        const NumMatrix Y7 = eval_sum(transpose_swap(x_intermediate(3, 1)));
        struct Mixed {
            std::pair<int, int> x, y;
            const NumMatrix* X;
            int ex;
            const NumMatrix* Y;
            int ey;
        };
        const Mixed mixed[9] = {
            {{1, 1}, {3, 3}, &X3, -1, &Y3, -1}, {{1, 2}, {3, 2}, &X5, -1, &Y3, 0},
            {{1, 3}, {3, 1}, &X7, -1, &Y3, +1}, {{2, 1}, {2, 3}, &X3, 0, &Y5, -1},
            {{2, 2}, {2, 2}, &X5, 0, &Y5, 0},   {{2, 3}, {2, 1}, &X7, 0, &Y5, +1},
            {{3, 1}, {1, 3}, &X3, +1, &Y7, -1}, {{3, 2}, {1, 2}, &X5, +1, &Y7, 0},
            {{3, 3}, {1, 1}, &X7, +1, &Y7, +1}};
        int mi = 0;
        for (const auto& m : mixed) {
            const NumMatrix lhs = Tat(m.x.first, m.x.second, false) * Tat(m.y.first, m.y.second, true) -
                                  Tat(m.x.first, m.x.second, true) * Tat(m.y.first, m.y.second, false);
            const NumMatrix rhs = -rep.K_pp * (spow(m.ex) * (*m.X) - spow(m.ey) * (*m.Y));
            const double res = (lhs - rhs).cwiseAbs().maxCoeff();
            rep.mixed_max = std::max(rep.mixed_max, res);
            rep.details.push_back({"mixed" + std::to_string(++mi), res});
        }
    }

    // wholesale identity on aux x aux x quantum
    {
        const long dq = blocks.dim();
        const long big = static_cast<long>(N) * N * dq;
        NumMatrix lhs = NumMatrix::Zero(big, big), rhs = NumMatrix::Zero(big, big);
        const NumMatrix rhat = poly_rhat(N).eval(p.q, rep.K_pp);
        for (int i = 1; i <= N; ++i)
            for (int k = 1; k <= N; ++k)
                for (int j = 1; j <= N; ++j)
                    for (int l = 1; l <= N; ++l) {
                        const NumMatrix ab = Tat(i, j, false) * Tat(k, l, true);
                        const NumMatrix ba = Tat(i, j, true) * Tat(k, l, false);
                        const long ar = (static_cast<long>(i - 1) * N + (k - 1)) * dq;
                        const long ac = (static_cast<long>(j - 1) * N + (l - 1)) * dq;
                        lhs.block(ar, ac, dq, dq) = ab;
                        rhs.block(ar, ac, dq, dq) = ba;
                    }
        NumMatrix Rbig = NumMatrix::Zero(big, big);
        for (long a = 0; a < static_cast<long>(N) * N; ++a)
            for (long b = 0; b < static_cast<long>(N) * N; ++b)
                if (rhat(a, b) != 0.0)
                    Rbig.block(a * dq, b * dq, dq, dq) = rhat(a, b) * NumMatrix::Identity(dq, dq);
        rep.wholesale_residual = (Rbig * lhs - rhs * Rbig).cwiseAbs().maxCoeff();
    }
    return rep;
}

}  // namespace braidlat
