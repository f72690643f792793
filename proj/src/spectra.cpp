#include "braidlat/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace braidlat {

std::vector<Complex> fit_k_polynomial(const std::vector<double>& Ks,
                                      const std::vector<Complex>& vals, int degree,
                                      double holdout_tol) {
    if (static_cast<int>(Ks.size()) < degree + 1 || Ks.size() != vals.size())
        throw std::invalid_argument("fit_k_polynomial: need at least degree+1 samples");
    const int m = degree + 1;
    Eigen::MatrixXd V(m, m);
    Eigen::VectorXcd b(m);
    for (int i = 0; i < m; ++i) {
        double pw = 1.0;
        for (int j = 0; j < m; ++j) {
            V(i, j) = pw;
            pw *= Ks[static_cast<std::size_t>(i)];
        }
        b(i) = vals[static_cast<std::size_t>(i)];
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(V);
    const Eigen::VectorXd xr = lu.solve(b.real().eval());
    const Eigen::VectorXd xi = lu.solve(b.imag().eval());
    std::vector<Complex> coeff(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) coeff[static_cast<std::size_t>(j)] = Complex(xr(j), xi(j));
    // held-out residual
    for (std::size_t i = static_cast<std::size_t>(m); i < Ks.size(); ++i) {
        Complex acc = 0.0;
        for (int j = m - 1; j >= 0; --j) acc = acc * Ks[i] + coeff[static_cast<std::size_t>(j)];
        if (std::abs(acc - vals[i]) > holdout_tol * (1.0 + std::abs(vals[i])))
            throw std::runtime_error("fit_k_polynomial: held-out residual " +
                                     std::to_string(std::abs(acc - vals[i])) +
                                     " exceeds tolerance (branch matching failure?)");
    }
    return coeff;
}

std::vector<SpectralRecord> diagonalize_block(const ReducedBlock& B, const FitOptions& opt) {
    std::vector<SpectralRecord> out;
    const long m = B.dim();
    if (m == 0) return out;
    const int r = B.r;
    std::vector<double> Ks;
    for (int j = 0; j < r + 3; ++j) Ks.push_back(opt.first_K + opt.step_K * j);

    // reference decomposition; branches sharing an eigenvalue at the reference
    // point form one group (eigenvectors within a degenerate eigenspace are
    // basis-dependent, so matching must work with the subspace, not vectors)
    Eigen::ComplexEigenSolver<NumMatrix> ref(B.eval(Ks[0]));
    const Eigen::MatrixXcd V0 = ref.eigenvectors();
    const Eigen::VectorXcd e0 = ref.eigenvalues();
    std::vector<std::vector<long>> groups;
    {
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (long i = 0; i < m; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            std::vector<long> g{i};
            used[static_cast<std::size_t>(i)] = true;
            for (long j = i + 1; j < m; ++j)
                if (!used[static_cast<std::size_t>(j)] &&
                    std::abs(e0(i) - e0(j)) < 1e-7 * (1.0 + std::abs(e0(i)))) {
                    g.push_back(j);
                    used[static_cast<std::size_t>(j)] = true;
                }
            groups.push_back(std::move(g));
        }
    }
    // orthonormal basis per group for subspace-overlap scoring
    std::vector<Eigen::MatrixXcd> gbasis;
    for (const auto& g : groups) {
        Eigen::MatrixXcd cols(m, static_cast<long>(g.size()));
        for (std::size_t c = 0; c < g.size(); ++c) cols.col(static_cast<long>(c)) = V0.col(g[c]);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(cols);
        gbasis.push_back(qr.householderQ() * Eigen::MatrixXcd::Identity(m, static_cast<long>(g.size())));
    }

    // group value per sample; within-group spread must stay at rounding level
    Eigen::MatrixXcd vals(static_cast<long>(groups.size()), static_cast<long>(Ks.size()));
    for (std::size_t gi = 0; gi < groups.size(); ++gi) vals(static_cast<long>(gi), 0) = e0(groups[gi][0]);
    for (std::size_t s = 1; s < Ks.size(); ++s) {
        Eigen::ComplexEigenSolver<NumMatrix> es(B.eval(Ks[s]));
        const Eigen::MatrixXcd V = es.eigenvectors();
        std::vector<std::tuple<double, std::size_t, long>> scored;
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
            for (long k = 0; k < m; ++k) {
                const double ov = (gbasis[gi].adjoint() * V.col(k)).norm() / V.col(k).norm();
                scored.emplace_back(ov, gi, k);
            }
        std::sort(scored.begin(), scored.end(),
                  [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
        std::vector<std::size_t> room(groups.size());
        for (std::size_t gi = 0; gi < groups.size(); ++gi) room[gi] = groups[gi].size();
        std::vector<bool> usedK(static_cast<std::size_t>(m), false);
        std::vector<std::vector<Complex>> got(groups.size());
        long assigned = 0;
        for (const auto& [ov, gi, k] : scored) {
            if (room[gi] == 0 || usedK[static_cast<std::size_t>(k)]) continue;
            if (ov < opt.overlap_floor)
                throw std::runtime_error("diagonalize_block: eigenbranch overlap " +
                                         std::to_string(ov) +
                                         " below floor; overlap matrix suspect");
            --room[gi];
            usedK[static_cast<std::size_t>(k)] = true;
            got[gi].push_back(es.eigenvalues()(k));
            if (++assigned == m) break;
        }
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            Complex mean = 0.0;
            for (const Complex& v : got[gi]) mean += v;
            mean /= static_cast<double>(got[gi].size());
            for (const Complex& v : got[gi])
                if (std::abs(v - mean) > 1e-6 * (1.0 + std::abs(mean)))
                    throw std::runtime_error(
                        "diagonalize_block: degenerate group split between samples "
                        "(accidental crossing at the reference point?)");
            vals(static_cast<long>(gi), static_cast<long>(s)) = mean;
        }
    }

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        SpectralRecord rec;
        rec.N = B.N;
        rec.r = r;
        rec.n = B.n;
        rec.omega = B.omega;
        rec.q = B.q;
        std::vector<Complex> vv(Ks.size());
        for (std::size_t s = 0; s < Ks.size(); ++s) vv[s] = vals(static_cast<long>(gi), static_cast<long>(s));
        rec.f = fit_k_polynomial(Ks, vv, r, opt.holdout_tol);
        rec.eigvec = V0.col(groups[gi][0]);
        rec.multiplicity = static_cast<int>(groups[gi].size());
        for (const auto& o : B.basis) rec.basis.push_back(word_str(o.rep));
        out.push_back(std::move(rec));
    }

    // merge any residual coinciding polynomials into multiplicity
    std::vector<SpectralRecord> merged;
    std::vector<bool> taken(out.size(), false);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (taken[i]) continue;
        SpectralRecord rec = out[i];
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (taken[j]) continue;
            double d = 0.0;
            for (int c = 0; c <= r; ++c)
                d = std::max(d, std::abs(rec.f[static_cast<std::size_t>(c)] -
                                         out[j].f[static_cast<std::size_t>(c)]));
            if (d <= opt.merge_tol) {
                rec.multiplicity += out[j].multiplicity;
                taken[j] = true;
            }
        }
        merged.push_back(std::move(rec));
    }
    // deterministic order: by f coefficients lexicographically
    std::sort(merged.begin(), merged.end(), [](const SpectralRecord& a, const SpectralRecord& b) {
        for (std::size_t c = 0; c < a.f.size(); ++c) {
            if (std::abs(a.f[c].real() - b.f[c].real()) > 1e-10) return a.f[c].real() < b.f[c].real();
            if (std::abs(a.f[c].imag() - b.f[c].imag()) > 1e-10) return a.f[c].imag() < b.f[c].imag();
        }
        return false;
    });
    return merged;
}

std::vector<SpectralRecord> spectrum_records(const ModelParams& p, const TransferMatrix& T,
                                             std::optional<int> n_filter,
                                             std::optional<RootOfUnity> omega_filter) {
    if (auto v = check_weight_invariance(T))
        throw std::logic_error("spectrum_records: weight leakage detected");
    if (auto v = check_cp_commutation(T))
        throw std::logic_error("spectrum_records: CP commutation violated");
    if (omega_filter && T.r % omega_filter->den != 0)
        throw std::invalid_argument("spectrum_records: omega order must divide r");
    std::vector<SpectralRecord> out;
    for (const auto& [n, om] : block_keys(T.N, T.r)) {
        if (n_filter && n != *n_filter) continue;
        if (omega_filter) {
            RootOfUnity want(omega_filter->num * (T.r / omega_filter->den), T.r);
            if (!(om == want)) continue;
        }
        const ReducedBlock B = reduced_block(T, n, om, p.q, true);
        auto recs = diagonalize_block(B);
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

std::vector<SpectralRecord> spectrum_records(const ModelParams& p, int r,
                                             std::optional<int> n_filter,
                                             std::optional<RootOfUnity> omega_filter,
                                             std::size_t cap) {
    const TransferMatrix T = build_transfer(p.N, r, cap);
    return spectrum_records(p, T, n_filter, omega_filter);
}

std::vector<Complex> records_sum(const std::vector<SpectralRecord>& recs, int r) {
    std::vector<Complex> acc(static_cast<std::size_t>(r) + 1, 0.0);
    for (const auto& rec : recs)
        for (std::size_t c = 0; c < acc.size(); ++c)
            acc[c] += static_cast<double>(rec.multiplicity) * rec.f[c];
    return acc;
}

double global_sum_residual(const std::vector<SpectralRecord>& recs, int N, int r) {
    const auto acc = records_sum(recs, r);
    double worst = 0.0;
    double binom = 1.0;
    for (int c = 0; c <= r; ++c) {
        const double want = N * binom;
        worst = std::max(worst, std::abs(acc[static_cast<std::size_t>(c)] - want) / (1.0 + want));
        binom = binom * (r - c) / (c + 1);
    }
    return worst;
}

std::vector<Complex> subspace_trace(const std::vector<SpectralRecord>& recs, int n, int r) {
    std::vector<Complex> acc(static_cast<std::size_t>(r) + 1, 0.0);
    for (const auto& rec : recs) {
        if (rec.n != n) continue;
        for (std::size_t c = 0; c < acc.size(); ++c)
            acc[c] += static_cast<double>(rec.multiplicity) * rec.f[c];
    }
    return acc;
}

double f0_omega_residual(const std::vector<SpectralRecord>& recs) {
    double worst = 0.0;
    for (const auto& rec : recs) worst = std::max(worst, std::abs(rec.f[0] - rec.omega.value()));
    return worst;
}

double projector_overlap_residual(const ReducedBlock& B, double K1, double K2) {
    const long m = B.dim();
    if (m == 0) return 0.0;
    auto projectors = [&](double K) {
        Eigen::ComplexEigenSolver<NumMatrix> es(B.eval(K));
        const Eigen::MatrixXcd V = es.eigenvectors();
        const Eigen::MatrixXcd W = V.inverse();  // rows = left eigenvectors
        return std::make_tuple(es.eigenvalues().eval(), V, W);
    };
    auto [e1, V1, W1] = projectors(K1);
    auto [e2, V2, W2] = projectors(K2);
    // group branches by eigenvalue coincidence at each K, then compare grouped
    // spectral projectors after matching groups by overlap
    const double gtol = 1e-7;
    auto groups_of = [&](const Eigen::VectorXcd& e) {
        std::vector<std::vector<long>> gs;
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (long i = 0; i < m; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            std::vector<long> g{i};
            used[static_cast<std::size_t>(i)] = true;
            for (long j = i + 1; j < m; ++j)
                if (!used[static_cast<std::size_t>(j)] && std::abs(e(i) - e(j)) < gtol * (1.0 + std::abs(e(i)))) {
                    g.push_back(j);
                    used[static_cast<std::size_t>(j)] = true;
                }
            gs.push_back(std::move(g));
        }
        return gs;
    };
    auto proj = [&](const Eigen::MatrixXcd& V, const Eigen::MatrixXcd& W, const std::vector<long>& g) {
        Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(m, m);
        for (long i : g) P += V.col(i) * W.row(i);
        return P;
    };
    const auto g1 = groups_of(e1), g2 = groups_of(e2);
    double worst = 0.0;
    std::vector<bool> used(g2.size(), false);
    for (const auto& ga : g1) {
        const Eigen::MatrixXcd Pa = proj(V1, W1, ga);
        double best = std::numeric_limits<double>::infinity();
        std::size_t pick = g2.size();
        for (std::size_t j = 0; j < g2.size(); ++j) {
            if (used[j] || g2[j].size() != ga.size()) continue;
            const double d = (Pa - proj(V2, W2, g2[j])).norm();
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        if (pick == g2.size()) return std::numeric_limits<double>::infinity();
        used[pick] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

Complex period_weighted_dot(const ReducedBlock& B, const Eigen::VectorXcd& u,
                            const Eigen::VectorXcd& v) {
    Complex acc = 0.0;
    for (long i = 0; i < B.dim(); ++i)
        acc += static_cast<double>(B.basis[static_cast<std::size_t>(i)].period) * std::conj(u(i)) * v(i);
    return acc;
}

}  // namespace braidlat
