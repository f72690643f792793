#pragma once

#include "braidlat/cayley.hpp"
#include "braidlat/hamiltonian.hpp"
#include "braidlat/oracle.hpp"
#include "braidlat/rtt.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>

namespace braidlat {

using Json = nlohmann::ordered_json;

struct RunConfig {
    int N = 3;
    int r = 2;
    std::vector<double> qs = {1.0};
    int grid = 4;
    std::optional<double> theta, theta_p;  // defaults derived from eta when absent
    Complex lambda{0.37, 0.0};
    double tol_ybe = 1e-10;
    double tol_commute = 1e-9;
    double tol_rtt = 1e-10;
    double tol_cayley = 1e-10;
    double tol_eig = 1e-8;
    std::uint64_t seed = 20060727;
    std::size_t cap = kDefaultStateCap;
    std::optional<int> n_filter;
    std::optional<RootOfUnity> omega_filter;
    std::string oracle_path = default_oracle_path();

    void validate() const;  // throws std::invalid_argument
};

Json params_json(const RunConfig& cfg);

// individual checks; each returns {pass: bool, ...} and never throws on a
// failed tolerance (only on config errors)
Json check_ybe(const RunConfig& cfg);
Json check_trace(const RunConfig& cfg);
Json check_projector(const RunConfig& cfg);
Json check_commutativity(const RunConfig& cfg);
Json check_rtt(const RunConfig& cfg);
Json check_cayley(const RunConfig& cfg);

Json spectrum_json(const RunConfig& cfg);
Json hamiltonian_json(const RunConfig& cfg);
Json dims_json(const RunConfig& cfg);

// full bundle: config echo, all checks, records, oracle comparison; the
// "timings" object is the only nondeterministic field
Json full_report(const RunConfig& cfg);

Json record_json(const SpectralRecord& rec);

bool report_passed(const Json& rep);

}  // namespace braidlat
