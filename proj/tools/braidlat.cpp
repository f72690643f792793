// Command-line front end: verification runs and JSON/CSV reports for the
// braid-matrix lattice models.

#include "braidlat/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using braidlat::Json;
using braidlat::RunConfig;

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("BRAIDLAT_OUTDIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

int emit(const Json& j, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(resolve_out(json_path));
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct CommonFlags {
    RunConfig cfg;
    std::string json_path;
    std::string omega_arg;

    void attach(CLI::App* app, bool with_r = true) {
        app->add_option("--N", cfg.N, "state count per site (>= 3)");
        if (with_r) app->add_option("--r", cfg.r, "chain order");
        app->add_option("--q", cfg.qs, "q values (repeatable)");
        app->add_option("--grid", cfg.grid, "theta grid size");
        app->add_option("--theta", cfg.theta, "theta (absolute)");
        app->add_option("--theta-p", cfg.theta_p, "theta' (absolute)");
        app->add_option("--seed", cfg.seed, "seed for sampled checks");
        app->add_option("--cap", cfg.cap, "max basis states N^r");
        app->add_option("--tol-ybe", cfg.tol_ybe, "YBE residual tolerance");
        app->add_option("--tol-commute", cfg.tol_commute, "commutator tolerance");
        app->add_option("--tol-rtt", cfg.tol_rtt, "exchange-relation tolerance");
        app->add_option("--tol-cayley", cfg.tol_cayley, "inverse-transform tolerance");
        app->add_option("--tol-eig", cfg.tol_eig, "eigenvalue comparison tolerance");
        app->add_option("--json", json_path, "write JSON to file instead of stdout");
    }

    void attach_filters(CLI::App* app) {
        app->add_option("--n", cfg.n_filter, "restrict to one weight class");
        app->add_option("--omega", omega_arg, "restrict to one CP eigenvalue, as k/d");
    }

    void finish() {
        if (!omega_arg.empty()) {
            const auto slash = omega_arg.find('/');
            if (slash == std::string::npos)
                throw CLI::ValidationError("--omega expects k/d, e.g. 1/4");
            cfg.omega_filter = braidlat::RootOfUnity(std::stoi(omega_arg.substr(0, slash)),
                                                     std::stoi(omega_arg.substr(slash + 1)));
        }
        cfg.validate();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for baxterized braid-matrix lattice models"};
    app.require_subcommand(1);

    CommonFlags vf, sf, hf, df, cf, rf;

    auto* verify = app.add_subcommand("verify", "run verification checks, exit 0 iff all pass");
    std::string what = "all";
    verify->add_option("what", what, "all|ybe|trace|projector|commute|rtt|cayley")
        ->check(CLI::IsMember({"all", "ybe", "trace", "projector", "commute", "rtt", "cayley"}));
    bool verify_all = false;
    verify->add_flag("--all", verify_all, "run every check (default)");
    vf.attach(verify);

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue polynomials per (n, omega) block");
    std::string dump_t;
    spectrum->add_option("--dump-t", dump_t,
                         "write the transfer matrix as sparse triplets: row col entry");
    sf.attach(spectrum);
    sf.attach_filters(spectrum);

    auto* hamiltonian = app.add_subcommand("hamiltonian", "chain Hamiltonian spectrum and audits");
    hf.attach(hamiltonian);

    auto* dims = app.add_subcommand("dims", "weight-class dimension table and orbit census");
    df.attach(dims);

    auto* cayley = app.add_subcommand("cayley", "inverse transform X and potential V");
    std::pair<double, double> c_lambda{0.37, 0.0};
    std::string emit_v;
    cf.attach(cayley, false);
    cayley->add_option("--lambda", c_lambda.first, "lambda (real part)");
    cayley->add_option("--lambda-im", c_lambda.second, "lambda (imaginary part)");
    cayley->add_option("--emit-v", emit_v, "write the 81-row V coefficient table as CSV");

    auto* report = app.add_subcommand("report", "full bundle with oracle comparison");
    rf.attach(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            vf.finish();
            if (verify_all) what = "all";
            Json out;
            out["kind"] = "verify";
            out["what"] = what;
            bool pass = true;
            auto run = [&](const char* name, Json j) {
                pass = pass && j["pass"].get<bool>();
                out["checks"][name] = std::move(j);
            };
            if (what == "all" || what == "projector") run("projector", braidlat::check_projector(vf.cfg));
            if (what == "all" || what == "trace") run("trace", braidlat::check_trace(vf.cfg));
            if (what == "all" || what == "ybe") run("ybe", braidlat::check_ybe(vf.cfg));
            if (what == "all" || what == "commute") run("commute", braidlat::check_commutativity(vf.cfg));
            if ((what == "all" && vf.cfg.N == 3) || what == "rtt") run("rtt", braidlat::check_rtt(vf.cfg));
            if ((what == "all" && vf.cfg.N == 3) || what == "cayley") run("cayley", braidlat::check_cayley(vf.cfg));
            out["pass"] = pass;
            const int rc = emit(out, vf.json_path);
            return rc != 0 ? rc : (pass ? 0 : 1);
        }
        if (*spectrum) {
            sf.finish();
            if (!dump_t.empty()) {
                std::ofstream out(resolve_out(dump_t));
                if (!out) {
                    std::cerr << "error: cannot write " << dump_t << "\n";
                    return 2;
                }
                const braidlat::TransferMatrix T =
                    braidlat::build_transfer(sf.cfg.N, sf.cfg.r, sf.cfg.cap);
                out << "# transfer matrix N=" << sf.cfg.N << " r=" << sf.cfg.r
                    << " dim=" << T.m.dim() << " nnz=" << T.m.nnz() << "\n";
                out << "# row col entry   (0-based indices; entry is a polynomial in K over q)\n";
                T.m.for_each([&](long i, long j, const braidlat::KPoly& v) {
                    out << i << " " << j << " " << v.str() << "\n";
                });
            }
            return emit(braidlat::spectrum_json(sf.cfg), sf.json_path);
        }
        if (*hamiltonian) {
            hf.finish();
            return emit(braidlat::hamiltonian_json(hf.cfg), hf.json_path);
        }
        if (*dims) {
            df.finish();
            return emit(braidlat::dims_json(df.cfg), df.json_path);
        }
        if (*cayley) {
            cf.cfg.N = 3;
            cf.finish();
            const braidlat::ModelParams p = braidlat::ModelParams::create(3, cf.cfg.qs.front());
            const double th = cf.cfg.theta.value_or(-0.3 * p.eta);
            const braidlat::Complex lam(c_lambda.first, c_lambda.second);
            const braidlat::CayleyResult res = braidlat::inverse_cayley(p, th, lam);
            Json out;
            out["kind"] = "cayley";
            out["q"] = p.q;
            out["theta"] = th;
            out["K"] = res.K;
            out["lambda"] = Json::array({lam.real(), lam.imag()});
            out["convention"] = "-iV = I + 2*lambda*X";
            out["solve_residual"] = res.solve_residual;
            out["consistency_residual"] = res.consistency_residual;
            out["rcond"] = res.rcond;
            out["closed_form_max_diff"] =
                (res.X - braidlat::closed_form_x(p.q, res.K, lam)).cwiseAbs().maxCoeff();
            if (!emit_v.empty()) {
                std::ofstream csv(resolve_out(emit_v));
                if (!csv) {
                    std::cerr << "error: cannot write " << emit_v << "\n";
                    return 2;
                }
                csv << "a,b,c,d,re,im\n";
                for (const auto& row : braidlat::v_coefficient_table(res))
                    csv << row.a << "," << row.b << "," << row.c << "," << row.d << ","
                        << row.value.real() << "," << row.value.imag() << "\n";
                out["csv"] = emit_v;
            }
            return emit(out, cf.json_path);
        }
        if (*report) {
            rf.finish();
            const Json out = braidlat::full_report(rf.cfg);
            const int rc = emit(out, rf.json_path);
            return rc != 0 ? rc : (braidlat::report_passed(out) ? 0 : 1);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
