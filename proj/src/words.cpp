#include "braidlat/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braidlat {

long word_to_index(const StateWord& w, int N) {
    long idx = 0;
    for (int d : w) idx = idx * N + (d - 1);
    return idx;
}

StateWord index_to_word(long idx, int N, int r) {
    StateWord w(static_cast<std::size_t>(r));
    for (int k = r - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<int>(idx % N) + 1;
        idx /= N;
    }
    return w;
}

int word_weight(const StateWord& w) { return std::accumulate(w.begin(), w.end(), 0); }

std::string word_str(const StateWord& w) {
    std::string s;
    for (int d : w) s += std::to_string(d);
    return s;
}

StateWord word_from_str(const std::string& s) {
    StateWord w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

StateWord rotate_left(const StateWord& w) {
    StateWord v(w.begin() + 1, w.end());
    v.push_back(w.front());
    return v;
}

StateWord rotate_right(const StateWord& w) {
    StateWord v;
    v.reserve(w.size());
    v.push_back(w.back());
    v.insert(v.end(), w.begin(), w.end() - 1);
    return v;
}

RootOfUnity::RootOfUnity(int n, int d) {
    if (d <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
    n = ((n % d) + d) % d;
    int g = std::gcd(n, d);
    if (n == 0) g = d;
    num = n / g;
    den = d / g;
}

std::complex<double> RootOfUnity::value() const {
    return std::polar(1.0, 2.0 * M_PI * num / den);
}

bool RootOfUnity::operator<(const RootOfUnity& o) const {
    return static_cast<long>(num) * o.den < static_cast<long>(o.num) * den;
}

long subspace_dim(int N, int r, int n) {
    if (n < r || n > N * r) return 0;
    // DP over digit count: ways[m] = #words of current length with sum m
    std::vector<long> ways(static_cast<std::size_t>(N * r) + 1, 0);
    ways[0] = 1;
    for (int pos = 0; pos < r; ++pos) {
        std::vector<long> next(ways.size(), 0);
        for (std::size_t m = 0; m < ways.size(); ++m) {
            if (ways[m] == 0) continue;
            for (int d = 1; d <= N; ++d)
                if (m + static_cast<std::size_t>(d) < next.size()) next[m + static_cast<std::size_t>(d)] += ways[m];
        }
        ways.swap(next);
    }
    return ways[static_cast<std::size_t>(n)];
}

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// count compositions (n_1,...,n_N), sum n_i = r, sum i*n_i = n, weighted by
// multinomial r!/(n_1!...n_N!)
long multinomial_count(int N, int r, int n, int digit, long multi, int used, int wsum) {
    if (digit == N + 1) return (used == r && wsum == n) ? multi : 0;
    long total = 0;
    for (int c = 0; c + used <= r; ++c) {
        if (wsum + digit * c > n) break;
        total += multinomial_count(N, r, n, digit + 1, multi * binomial(r - used, c), used + c, wsum + digit * c);
    }
    return total;
}

}  // namespace

long subspace_dim_multinomial(int N, int r, int n) {
    if (n < r || n > N * r) return 0;
    return multinomial_count(N, r, n, 1, 1, 0, 0);
}

std::vector<CPOrbit> enumerate_orbits(int N, int r, int n) {
    std::vector<CPOrbit> out;
    std::set<StateWord> seen;
    StateWord w(static_cast<std::size_t>(r), 1);
    // iterate all words of weight n in lexicographic order
    const long total = 1;
    (void)total;
    bool done = false;
    while (!done) {
        if (word_weight(w) == n && !seen.count(w)) {
            // collect cyclic orbit
            std::vector<StateWord> cyc{w};
            for (StateWord x = rotate_right(w); x != w; x = rotate_right(x)) cyc.push_back(x);
            CPOrbit o;
            o.rep = *std::min_element(cyc.begin(), cyc.end());
            o.period = static_cast<int>(cyc.size());
            o.members.push_back(o.rep);
            for (StateWord x = rotate_right(o.rep); x != o.rep; x = rotate_right(x)) o.members.push_back(x);
            for (const auto& m : o.members) seen.insert(m);
            out.push_back(std::move(o));
        }
        // advance
        int k = r - 1;
        while (k >= 0 && w[static_cast<std::size_t>(k)] == N) {
            w[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) done = true;
        else ++w[static_cast<std::size_t>(k)];
    }
    std::sort(out.begin(), out.end(), [](const CPOrbit& a, const CPOrbit& b) { return a.rep < b.rep; });
    return out;
}

long burnside_orbit_count(int N, int r, int n) {
    // words fixed by shift^j are determined by a prefix of length g = gcd(j,r)
    // repeated r/g times; weight must be (r/g) * prefix-weight
    long acc = 0;
    for (int j = 0; j < r; ++j) {
        int g = std::gcd(j, r);
        int rep = r / g;
        if (n % rep != 0) continue;
        acc += subspace_dim(N, g, n / rep);
    }
    if (acc % r != 0) throw std::logic_error("burnside_orbit_count: non-integral orbit count");
    return acc / r;
}

std::vector<RootOfUnity> admitted_omegas(int period) {
    std::vector<RootOfUnity> out;
    out.reserve(static_cast<std::size_t>(period));
    for (int k = 0; k < period; ++k) out.emplace_back(k, period);
    return out;
}

std::vector<SymBasisVector> build_sym_basis(int N, int r, int n) {
    std::vector<SymBasisVector> out;
    for (const auto& o : enumerate_orbits(N, r, n))
        for (const auto& om : admitted_omegas(o.period)) out.push_back({o, om});
    return out;
}

}  // namespace braidlat
