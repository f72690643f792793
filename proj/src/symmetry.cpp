#include "braidlat/symmetry.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braidlat {

std::vector<long> cp_index_map(int N, int r) {
    const long dim = static_cast<long>(std::pow(N, r));
    std::vector<long> cp(static_cast<std::size_t>(dim));
    for (long idx = 0; idx < dim; ++idx)
        cp[static_cast<std::size_t>(idx)] = word_to_index(rotate_left(index_to_word(idx, N, r)), N);
    return cp;
}

PolyMatrix cp_matrix(int N, int r) {
    const auto cp = cp_index_map(N, r);
    PolyMatrix m(static_cast<long>(cp.size()));
    for (long j = 0; j < static_cast<long>(cp.size()); ++j)
        m.set(cp[static_cast<std::size_t>(j)], j, KPoly(1));
    return m;
}

std::optional<SymmetryViolation> check_weight_invariance(const TransferMatrix& T) {
    std::optional<SymmetryViolation> bad;
    T.m.for_each([&](long i, long j, const KPoly& v) {
        if (bad) return;
        if (word_weight(index_to_word(i, T.N, T.r)) != word_weight(index_to_word(j, T.N, T.r)))
            bad = SymmetryViolation{i, j, "weight", v, KPoly()};
    });
    return bad;
}

std::optional<SymmetryViolation> check_cp_commutation(const TransferMatrix& T) {
    const auto cp = cp_index_map(T.N, T.r);
    std::optional<SymmetryViolation> bad;
    // CP T CP^{-1} == T  <=>  T[cp(i), cp(j)] == T[i, j] for all entries
    T.m.for_each([&](long i, long j, const KPoly& v) {
        if (bad) return;
        const KPoly& img = T.m.at(cp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
        if (!(img == v)) bad = SymmetryViolation{i, j, "cp", v, img};
    });
    return bad;
}

bool transfer_at_zero_is_cp(const TransferMatrix& T) {
    const auto cp = cp_index_map(T.N, T.r);
    long diag_hits = 0;
    bool ok = true;
    T.m.for_each([&](long i, long j, const KPoly& v) {
        const SLaurent& c0 = v.coeff(0);
        if (c0.is_zero()) return;
        if (cp[static_cast<std::size_t>(j)] != i || !(c0 == SLaurent(1))) ok = false;
        ++diag_hits;
    });
    return ok && diag_hits == T.m.dim();
}

ReducedBlock reduced_block(const TransferMatrix& T, int n, const RootOfUnity& omega_in, double q,
                           bool checked) {
    if (!checked) {
        if (auto v = check_weight_invariance(T))
            throw std::logic_error("reduced_block: weight leakage at (" + std::to_string(v->row) +
                                   "," + std::to_string(v->col) + "): " + v->entry.str());
        if (auto v = check_cp_commutation(T))
            throw std::logic_error("reduced_block: CP commutation violated at (" +
                                   std::to_string(v->row) + "," + std::to_string(v->col) +
                                   "): " + v->entry.str() + " vs " + v->other.str());
    }
    if (T.r % omega_in.den != 0)
        throw std::invalid_argument("reduced_block: omega order must divide r");
    ReducedBlock B;
    B.N = T.N;
    B.r = T.r;
    B.n = n;
    B.omega = RootOfUnity(omega_in.num * (T.r / omega_in.den), T.r);
    B.q = q;
    const int ord = B.omega.order();

    const auto all_orbits = enumerate_orbits(T.N, T.r, n);
    std::vector<CPOrbit> admitted;
    for (const auto& o : all_orbits)
        if (o.period % ord == 0) admitted.push_back(o);
    B.basis = admitted;
    const long m = static_cast<long>(admitted.size());
    for (int j = 0; j <= T.r; ++j) B.kc.push_back(NumMatrix::Zero(m, m));
    if (m == 0) return B;

    // member word -> (orbit index, shift p) over admitted orbits
    std::map<long, std::pair<long, int>> pos;
    for (long i = 0; i < m; ++i)
        for (int p = 0; p < admitted[static_cast<std::size_t>(i)].period; ++p)
            pos[word_to_index(admitted[static_cast<std::size_t>(i)].members[static_cast<std::size_t>(p)], T.N)] = {i, p};
    std::map<long, long> rep_col;
    for (long c = 0; c < m; ++c) rep_col[word_to_index(admitted[static_cast<std::size_t>(c)].rep, T.N)] = c;

    // single pass over T: B[row,col] = (d_col/d_row) sum_p c_{row,p} omega^{-p}
    // where T |rep_col> = sum c_{row,p} sigma^p |rep_row>
    T.m.for_each([&](long i, long j, const KPoly& v) {
        auto ct = rep_col.find(j);
        if (ct == rep_col.end()) return;
        auto it = pos.find(i);
        if (it == pos.end()) return;  // non-admitted orbit: exact zero after the omega sum
        const long col = ct->second;
        const auto [row, p] = it->second;
        const Complex phase =
            std::polar(1.0, -2.0 * M_PI * B.omega.num * p / B.omega.den) *
            (static_cast<double>(admitted[static_cast<std::size_t>(col)].period) /
             admitted[static_cast<std::size_t>(row)].period);
        for (int d = 0; d <= v.degree(); ++d)
            B.kc[static_cast<std::size_t>(d)](row, col) += phase * v.coeff(d).eval(q);
    });
    return B;
}

NumMatrix ReducedBlock::eval(Complex K) const {
    NumMatrix M = NumMatrix::Zero(dim(), dim());
    for (std::size_t j = kc.size(); j-- > 0;) M = M * K + kc[j];
    return M;
}

std::vector<std::pair<int, RootOfUnity>> block_keys(int N, int r) {
    std::vector<std::pair<int, RootOfUnity>> keys;
    for (int n = r; n <= N * r; ++n) {
        std::set<RootOfUnity> oms;
        for (const auto& o : enumerate_orbits(N, r, n))
            for (const auto& om : admitted_omegas(o.period)) oms.insert(RootOfUnity(om.num * (r / om.den), r));
        for (const auto& om : oms) keys.emplace_back(n, om);
    }
    return keys;
}

double conjugate_pairing_residual(const TransferMatrix& Tq, const TransferMatrix& Tqinv, int n,
                                  const RootOfUnity& omega, double q,
                                  const std::vector<double>& K_grid) {
    const int mirror = (Tq.N + 1) * Tq.r - n;
    const ReducedBlock A = reduced_block(Tq, n, omega, q, true);
    const ReducedBlock B = reduced_block(Tqinv, mirror, omega, 1.0 / q, true);
    if (A.dim() != B.dim()) return std::numeric_limits<double>::infinity();
    if (A.dim() == 0) return 0.0;
    double worst = 0.0;
    for (double K : K_grid) {
        Eigen::ComplexEigenSolver<NumMatrix> ea(A.eval(K), false), eb(B.eval(K), false);
        const auto& va = ea.eigenvalues();
        const auto& vb = eb.eigenvalues();
        // Hausdorff distance between the two eigenvalue sets
        double h = 0.0;
        for (long i = 0; i < va.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (long j = 0; j < vb.size(); ++j) best = std::min(best, std::abs(va[i] - vb[j]));
            h = std::max(h, best);
        }
        for (long j = 0; j < vb.size(); ++j) {
            double best = std::numeric_limits<double>::infinity();
            for (long i = 0; i < va.size(); ++i) best = std::min(best, std::abs(va[i] - vb[j]));
            h = std::max(h, best);
        }
        worst = std::max(worst, h);
    }
    return worst;
}

}  // namespace braidlat
