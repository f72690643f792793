#pragma once

#include "braidlat/spectra.hpp"

#include <string>

namespace braidlat {

// small expression evaluator over complex numbers; variables q, w, constant i,
// functions sqrt(); used to evaluate transcribed closed forms at numeric (q, omega)
Complex eval_expr(const std::string& expr, double q, Complex w);

// one closed-form eigenvalue branch: coefficient expressions, keyed by
// (N, r, n, omega). omega_num = -1 encodes the wildcard entry "*/den"
// (one branch per den-th root of unity).
struct OracleEntry {
    int N = 0, r = 0, n = 0;
    int omega_num = 0, omega_den = 1;
    std::vector<std::string> coeff_exprs;  // f0..fr
};

// one transcribed eigenvector row: terms anchor-word -> coefficient expression
struct OracleVectorRow {
    int N = 0, r = 0, n = 0;
    int omega_num = 0, omega_den = 1;
    std::vector<std::pair<std::string, std::string>> terms;  // (anchor word, expr)
    std::string label;
};

struct OracleData {
    std::vector<OracleEntry> entries;
    std::vector<OracleVectorRow> vector_rows;
    std::string version_hash;  // FNV-1a of the data file bytes
};

OracleData load_oracle(const std::string& path);
std::string default_oracle_path();

// expected eigenvalue coefficient lists for block (n, omega=e^{2pi i k/r}) at q
std::vector<std::vector<Complex>> oracle_eigenvalues(const OracleData& data, int N, int r, int n,
                                                     const RootOfUnity& omega, double q);

struct BlockComparison {
    int n = 0;
    RootOfUnity omega;
    int computed = 0, expected = 0;  // branch counts with multiplicity
    double max_deviation = 0.0;      // coefficient-wise, after multiset matching
    bool counts_match = false;
    bool matched = false;
    bool oracle_missing = false;
};

std::vector<BlockComparison> oracle_compare(const std::vector<SpectralRecord>& recs,
                                            const OracleData& data, int N, int r, double q,
                                            double tol = 1e-8);

struct VectorRowResult {
    std::string label;
    int n = 0;
    RootOfUnity omega;
    double residual = 0.0;  // eigen-equation residual, relative
    bool pass = false;
};

// verify each transcribed eigenvector row against the numeric transfer matrix
std::vector<VectorRowResult> verify_oracle_vectors(const OracleData& data, const ModelParams& p,
                                                   const TransferMatrix& T, double K_sample = 0.47,
                                                   double tol = 1e-8);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace braidlat
