#include "braidlat/hamiltonian.hpp"

#include "braidlat/braid.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace braidlat {

namespace {

// local two-site kernel in tensor-slot order: P P0' P, evaluated at q
NumMatrix local_kernel(const ModelParams& p) {
    const PolyMatrix perm = poly_perm(p.N);
    const PolyMatrix k = perm * poly_p0prime(p.N) * perm;
    return k.eval(p.q, 0.0);
}

long checked_dim(int N, int r, std::size_t cap) {
    double d = std::pow(N, r);
    if (d > static_cast<double>(cap))
        throw std::length_error("hamiltonian: N^r exceeds the configured state cap");
    return static_cast<long>(std::llround(d));
}

}  // namespace

Hamiltonian hamiltonian_sum(const ModelParams& p, int r, std::size_t cap) {
    Hamiltonian H;
    H.N = p.N;
    H.r = r;
    H.q = p.q;
    H.kdot0 = kdot0(p);
    const long dim = checked_dim(p.N, r, cap);
    H.m = NumMatrix::Zero(dim, dim);
    if (r == 1) {
        // single site: T = (1+K) I, so the derivative path gives kdot0 * I
        H.m = H.kdot0 * NumMatrix::Identity(dim, dim);
        return H;
    }
    const NumMatrix ker = local_kernel(p);
    const int N = p.N;
    // bulk terms at slot pairs (k, k+1)
    for (int k = 0; k + 2 <= r; ++k) {
        const long left = static_cast<long>(std::pow(N, k));
        const long right = static_cast<long>(std::pow(N, r - k - 2));
        for (long l = 0; l < left; ++l)
            for (long a = 0; a < N * N; ++a)
                for (long b = 0; b < N * N; ++b) {
                    if (ker(a, b) == 0.0) continue;
                    for (long rr = 0; rr < right; ++rr)
                        H.m((l * N * N + a) * right + rr, (l * N * N + b) * right + rr) += ker(a, b);
                }
    }
    // wrap term on slots (r, 1)
    const long mid = dim / (N * N);
    for (long am = 0; am < N; ++am)
        for (long bm = 0; bm < N; ++bm)
            for (long al = 0; al < N; ++al)
                for (long bl = 0; bl < N; ++bl) {
                    const Complex v = ker(am * N + al, bm * N + bl);  // (slot r, slot 1)
                    if (v == 0.0) continue;
                    for (long w = 0; w < mid; ++w)
                        H.m(al * (N * mid) + w * N + am, bl * (N * mid) + w * N + bm) += v;
                }
    H.m *= H.kdot0;
    return H;
}

Hamiltonian hamiltonian_logderiv(const ModelParams& p, const TransferMatrix& T,
                                 bool finite_difference) {
    Hamiltonian H;
    H.N = T.N;
    H.r = T.r;
    H.q = p.q;
    H.kdot0 = kdot0(p);
    const long dim = T.m.dim();
    NumMatrix dT = NumMatrix::Zero(dim, dim);
    if (finite_difference) {
        const double h = 1e-6;
        dT = (T.m.eval(p.q, h) - T.m.eval(p.q, 0.0)) / h;
    } else {
        T.m.for_each([&](long i, long j, const KPoly& v) {
            const SLaurent& c1 = v.coeff(1);
            if (!c1.is_zero()) dT(i, j) = c1.eval(p.q);
        });
    }
    // T0 is the CP permutation; its inverse acts by row lookup:
    // (T0^{-1} dT)[i, :] = dT[cp(i), :]
    const auto cp = cp_index_map(T.N, T.r);
    NumMatrix out(dim, dim);
    for (long i = 0; i < dim; ++i) out.row(i) = dT.row(cp[static_cast<std::size_t>(i)]);
    H.m = H.kdot0 * out;
    return H;
}

Hamiltonian hamiltonian_logderiv(const ModelParams& p, int r, bool finite_difference,
                                 std::size_t cap) {
    return hamiltonian_logderiv(p, build_transfer(p.N, r, cap), finite_difference);
}

std::vector<Rational> spin_assignment(int N) {
    std::vector<Rational> s;
    for (int i = 1; i <= N; ++i) s.emplace_back(N + 1 - 2 * i, 2);
    return s;
}

std::vector<SelectionViolation> selection_rule_audit(const ModelParams& p) {
    const auto sigma = spin_assignment(p.N);
    const PolyMatrix gen = poly_p0prime(p.N);
    std::vector<SelectionViolation> out;
    gen.for_each([&](long row, long col, const KPoly&) {
        const int ia = static_cast<int>(row / p.N) + 1, ib = static_cast<int>(row % p.N) + 1;
        const int ja = static_cast<int>(col / p.N) + 1, jb = static_cast<int>(col % p.N) + 1;
        const bool rows_ok = sigma[static_cast<std::size_t>(ia - 1)] + sigma[static_cast<std::size_t>(ib - 1)] == 0;
        const bool cols_ok = sigma[static_cast<std::size_t>(ja - 1)] + sigma[static_cast<std::size_t>(jb - 1)] == 0;
        if (!rows_ok || !cols_ok) out.push_back({ja, jb, ia, ib});
    });
    return out;
}

Eigen::VectorXcd embed_sym_vector(const ReducedBlock& B, const Eigen::VectorXcd& coeffs) {
    const long dim = static_cast<long>(std::pow(B.N, B.r));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    for (long i = 0; i < B.dim(); ++i) {
        const CPOrbit& o = B.basis[static_cast<std::size_t>(i)];
        for (int m = 0; m < o.period; ++m) {
            const Complex phase = std::polar(1.0, 2.0 * M_PI * B.omega.num * m / B.omega.den);
            v(word_to_index(o.members[static_cast<std::size_t>(m)], B.N)) += coeffs(i) * phase;
        }
    }
    return v;
}

namespace {

Eigen::VectorXcd embed_record_vector(const SpectralRecord& rec) {
    const long dim = static_cast<long>(std::pow(rec.N, rec.r));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    for (long i = 0; i < rec.eigvec.size(); ++i) {
        StateWord w = word_from_str(rec.basis[static_cast<std::size_t>(i)]);
        const StateWord rep = w;
        int m = 0;
        do {
            v(word_to_index(w, rec.N)) +=
                rec.eigvec(i) * std::polar(1.0, 2.0 * M_PI * rec.omega.num * m / rec.omega.den);
            w = rotate_right(w);
            ++m;
        } while (w != rep);
    }
    return v;
}

}  // namespace

std::vector<HEigenvalue> h_eigens_from_records(const std::vector<SpectralRecord>& recs,
                                               const ModelParams& p, const Hamiltonian& H) {
    std::vector<HEigenvalue> out;
    const double kd = kdot0(p);
    for (const auto& rec : recs) {
        HEigenvalue he;
        he.record = &rec;
        const Complex omega_inv = std::conj(rec.omega.value());  // omega^{r-1} for omega^r = 1
        he.value = kd * omega_inv * rec.f[1];
        const Eigen::VectorXcd v = embed_record_vector(rec);
        he.direct_residual = (H.m * v - he.value * v).norm() / (v.norm() * (1.0 + std::abs(he.value)));
        out.push_back(he);
    }
    return out;
}

Complex trace_h(const Hamiltonian& H) { return H.m.trace(); }

double max_imag_eigenvalue(const Hamiltonian& H) {
    Eigen::ComplexEigenSolver<NumMatrix> es(H.m, false);
    return es.eigenvalues().imag().cwiseAbs().maxCoeff();
}

FlipGraphReport flip_graph_report(int N, int r) {
    FlipGraphReport rep;
    rep.N = N;
    rep.r = r;
    const auto sigma = spin_assignment(N);
    auto zero_pair = [&](int a, int b) {
        return sigma[static_cast<std::size_t>(a - 1)] + sigma[static_cast<std::size_t>(b - 1)] == 0;
    };
    const long dim = static_cast<long>(std::pow(N, r));
    std::vector<long> parent(static_cast<std::size_t>(dim));
    for (long i = 0; i < dim; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<long(long)> find = [&](long x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](long a, long b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (long idx = 0; idx < dim; ++idx) {
        const StateWord w = index_to_word(idx, N, r);
        for (int k = 0; k < r; ++k) {
            const int k2 = (k + 1) % r;
            if (!zero_pair(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(k2)])) continue;
            for (int a = 1; a <= N; ++a) {
                const int b = N + 1 - a;
                StateWord v = w;
                v[static_cast<std::size_t>(k)] = a;
                v[static_cast<std::size_t>(k2)] = b;
                unite(idx, word_to_index(v, N));
            }
        }
    }
    std::map<long, long> size_of;
    for (long i = 0; i < dim; ++i) ++size_of[find(i)];
    for (const auto& [root, sz] : size_of)
        rep.component_sizes[word_weight(index_to_word(root, N, r))].push_back(sz);
    for (auto& [n, sizes] : rep.component_sizes) std::sort(sizes.begin(), sizes.end());
    return rep;
}

}  // namespace braidlat
