#include "braidlat/oracle.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidlat {

namespace {

// recursive-descent parser: expr := term (('+'|'-') term)*, term := factor
// (('*'|'/') factor)*, factor := atom ('^' atom)?, atom := number | q | w | i
// | sqrt(expr) | (expr) | -atom
struct ExprParser {
    const std::string& s;
    std::size_t i = 0;
    double q;
    Complex w;

    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) { if (peek() == c) { ++i; return true; } return false; }

    Complex parse_expr() {
        Complex v = parse_term();
        while (true) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }
    Complex parse_term() {
        Complex v = parse_factor();
        while (true) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) v /= parse_factor();
            else return v;
        }
    }
    Complex parse_factor() {
        Complex base = parse_atom();
        if (eat('^')) {
            Complex e = parse_atom();
            if (std::abs(e.imag()) > 1e-15)
                throw std::invalid_argument("eval_expr: complex exponent in '" + s + "'");
            const double ed = e.real();
            if (std::abs(ed - std::round(ed)) < 1e-12) {
                long n = static_cast<long>(std::llround(ed));
                Complex acc = 1.0;
                Complex b = n < 0 ? 1.0 / base : base;
                for (long k = 0; k < std::abs(n); ++k) acc *= b;
                return acc;
            }
            return std::pow(base, ed);
        }
        return base;
    }
    Complex parse_atom() {
        skip();
        if (eat('-')) return -parse_factor();  // binds looser than '^'
        if (eat('(')) {
            Complex v = parse_expr();
            if (!eat(')')) throw std::invalid_argument("eval_expr: missing ')' in '" + s + "'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
            const double v = std::stod(s.substr(i, j - i));
            i = j;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            const std::string name = s.substr(i, j - i);
            i = j;
            if (name == "q") return Complex(q, 0.0);
            if (name == "w") return w;
            if (name == "i") return Complex(0.0, 1.0);
            if (name == "sqrt") {
                if (!eat('(')) throw std::invalid_argument("eval_expr: sqrt needs '(' in '" + s + "'");
                Complex v = parse_expr();
                if (!eat(')')) throw std::invalid_argument("eval_expr: missing ')' in '" + s + "'");
                return std::sqrt(v);
            }
            throw std::invalid_argument("eval_expr: unknown identifier '" + name + "' in '" + s + "'");
        }
        throw std::invalid_argument("eval_expr: parse error in '" + s + "' at " + std::to_string(i));
    }
};

std::string trim(const std::string& x) {
    std::size_t a = x.find_first_not_of(" \t\r\n");
    std::size_t b = x.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : x.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& x, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(x);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

int parse_int_field(const std::string& tok, const char* key) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw std::invalid_argument("oracle: expected " + prefix + " in '" + tok + "'");
    return std::stoi(tok.substr(prefix.size()));
}

}  // namespace

Complex eval_expr(const std::string& expr, double q, Complex w) {
    ExprParser p{expr, 0, q, w};
    Complex v = p.parse_expr();
    p.skip();
    if (p.i != expr.size())
        throw std::invalid_argument("eval_expr: trailing input in '" + expr + "'");
    return v;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string default_oracle_path() {
#ifdef BRAIDLAT_ORACLE_FILE
    return BRAIDLAT_ORACLE_FILE;
#else
    return "data/spectral_oracle.txt";
#endif
}

OracleData load_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_oracle: cannot open " + path);
    std::stringstream whole;
    whole << in.rdbuf();
    const std::string bytes = whole.str();

    OracleData data;
    data.version_hash = fnv1a_hex(bytes);
    std::istringstream lines(bytes);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const bool is_vec = line.rfind("vec ", 0) == 0;
        if (is_vec) line = trim(line.substr(4));
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("load_oracle: missing ':' at line " + std::to_string(lineno));
        std::string head = trim(line.substr(0, colon));
        std::string body = trim(line.substr(colon + 1));

        // head: N=3 r=4 n=8 w=0/1 [label=...]
        std::istringstream hs(head);
        std::string tok;
        int N = 0, r = 0, n = 0, wn = 0, wd = 1;
        std::string label;
        while (hs >> tok) {
            if (tok.rfind("N=", 0) == 0) N = std::stoi(tok.substr(2));
            else if (tok.rfind("r=", 0) == 0) r = std::stoi(tok.substr(2));
            else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
            else if (tok.rfind("w=", 0) == 0) {
                const auto frac = tok.substr(2);
                const auto slash = frac.find('/');
                if (slash == std::string::npos)
                    throw std::runtime_error("load_oracle: bad w= at line " + std::to_string(lineno));
                const std::string num = frac.substr(0, slash);
                wn = (num == "*") ? -1 : std::stoi(num);
                wd = std::stoi(frac.substr(slash + 1));
            } else if (tok.rfind("label=", 0) == 0) {
                label = tok.substr(6);
            } else {
                throw std::runtime_error("load_oracle: unknown token '" + tok + "' at line " +
                                         std::to_string(lineno));
            }
        }
        if (N == 0 || r == 0 || n == 0)
            throw std::runtime_error("load_oracle: incomplete key at line " + std::to_string(lineno));

        if (is_vec) {
            OracleVectorRow row;
            row.N = N; row.r = r; row.n = n; row.omega_num = wn; row.omega_den = wd;
            row.label = label;
            for (const auto& term : split(body, ';')) {
                const auto star = term.find('*');
                if (star == std::string::npos)
                    throw std::runtime_error("load_oracle: vec term needs word*expr at line " +
                                             std::to_string(lineno));
                row.terms.emplace_back(trim(term.substr(0, star)), trim(term.substr(star + 1)));
            }
            data.vector_rows.push_back(std::move(row));
        } else {
            OracleEntry e;
            e.N = N; e.r = r; e.n = n; e.omega_num = wn; e.omega_den = wd;
            e.coeff_exprs = split(body, '|');
            if (static_cast<int>(e.coeff_exprs.size()) != r + 1)
                throw std::runtime_error("load_oracle: expected r+1 coefficients at line " +
                                         std::to_string(lineno));
            data.entries.push_back(std::move(e));
        }
    }
    return data;
}

std::vector<std::vector<Complex>> oracle_eigenvalues(const OracleData& data, int N, int r, int n,
                                                     const RootOfUnity& omega, double q) {
    const RootOfUnity key(omega.num * (r / omega.den), r);
    std::vector<std::vector<Complex>> out;
    for (const auto& e : data.entries) {
        if (e.N != N || e.r != r || e.n != n) continue;
        std::vector<int> nums;
        if (e.omega_num >= 0) nums.push_back(e.omega_num);
        else for (int k = 0; k < e.omega_den; ++k) nums.push_back(k);
        for (int k : nums) {
            if (!(RootOfUnity(k * (r / e.omega_den), r) == key)) continue;
            const Complex w = RootOfUnity(k, e.omega_den).value();
            std::vector<Complex> coeff;
            for (const auto& ex : e.coeff_exprs) coeff.push_back(eval_expr(ex, q, w));
            out.push_back(std::move(coeff));
        }
    }
    return out;
}

std::vector<BlockComparison> oracle_compare(const std::vector<SpectralRecord>& recs,
                                            const OracleData& data, int N, int r, double q,
                                            double tol) {
    std::vector<BlockComparison> out;
    // group records by (n, omega)
    std::map<std::pair<int, std::pair<int, int>>, std::vector<const SpectralRecord*>> groups;
    for (const auto& rec : recs)
        groups[{rec.n, {rec.omega.num, rec.omega.den}}].push_back(&rec);
    for (const auto& [key, rs] : groups) {
        BlockComparison bc;
        bc.n = key.first;
        bc.omega = RootOfUnity(key.second.first, key.second.second);
        auto want = oracle_eigenvalues(data, N, r, bc.n, bc.omega, q);
        for (const auto* rec : rs) bc.computed += rec->multiplicity;
        bc.expected = static_cast<int>(want.size());
        if (want.empty()) {
            bc.oracle_missing = true;
            out.push_back(bc);
            continue;
        }
        bc.counts_match = bc.computed == bc.expected;
        // multiset matching of coefficient vectors (records expanded by multiplicity)
        std::vector<std::vector<Complex>> got;
        for (const auto* rec : rs)
            for (int mlt = 0; mlt < rec->multiplicity; ++mlt) got.push_back(rec->f);
        std::vector<bool> used(want.size(), false);
        bool all_ok = bc.counts_match;
        double devmax = 0.0;
        for (const auto& g : got) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t pick = want.size();
            for (std::size_t wv = 0; wv < want.size(); ++wv) {
                if (used[wv]) continue;
                double d = 0.0;
                for (std::size_t c = 0; c < g.size() && c < want[wv].size(); ++c)
                    d = std::max(d, std::abs(g[c] - want[wv][c]));
                if (d < best) {
                    best = d;
                    pick = wv;
                }
            }
            if (pick == want.size()) {
                all_ok = false;
                break;
            }
            used[pick] = true;
            devmax = std::max(devmax, best);
            if (best > tol) all_ok = false;
        }
        bc.max_deviation = devmax;
        bc.matched = all_ok;
        out.push_back(bc);
    }
    return out;
}

std::vector<VectorRowResult> verify_oracle_vectors(const OracleData& data, const ModelParams& p,
                                                   const TransferMatrix& T, double K_sample,
                                                   double tol) {
    std::vector<VectorRowResult> out;
    const long dim = T.m.dim();
    const NumMatrix Tn = T.m.eval(p.q, K_sample);
    for (const auto& row : data.vector_rows) {
        if (row.N != T.N || row.r != T.r) continue;
        std::vector<int> nums;
        if (row.omega_num >= 0) nums.push_back(row.omega_num);
        else for (int k = 0; k < row.omega_den; ++k) nums.push_back(k);
        for (int k : nums) {
            const Complex w = RootOfUnity(k, row.omega_den).value();
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            for (const auto& [word, expr] : row.terms) {
                const Complex c = eval_expr(expr, p.q, w);
                // omega-symmetrized vector anchored at the given word
                StateWord anchor = word_from_str(word);
                StateWord x = anchor;
                Complex phase = 1.0;
                do {
                    v(word_to_index(x, T.N)) += c * phase;
                    x = rotate_right(x);
                    phase *= w;
                } while (x != anchor);
            }
            VectorRowResult res;
            res.label = row.label;
            res.n = row.n;
            res.omega = RootOfUnity(k * (T.r / row.omega_den), T.r);
            const double nv = v.norm();
            if (nv < 1e-12) continue;  // omega not admitted for this anchor (null combination)
            const Eigen::VectorXcd Tv = Tn * v;
            // Rayleigh-style eigenvalue from the largest component
            long imax = 0;
            v.cwiseAbs().maxCoeff(&imax);
            const Complex lam = Tv(imax) / v(imax);
            res.residual = (Tv - lam * v).norm() / (std::abs(lam) * nv + nv);
            res.pass = res.residual < tol;
            out.push_back(res);
        }
    }
    return out;
}

}  // namespace braidlat
