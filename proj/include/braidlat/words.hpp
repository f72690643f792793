#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace braidlat {

// Site-label word a_1 a_2 ... a_r over {1..N}; leftmost digit = first tensor
// factor, flat index = sum (a_k - 1) N^{r-k}.
using StateWord = std::vector<int>;

long word_to_index(const StateWord& w, int N);
StateWord index_to_word(long idx, int N, int r);
int word_weight(const StateWord& w);
std::string word_str(const StateWord& w);
StateWord word_from_str(const std::string& s);

// cyclic shifts: left |a1 a2 .. ar> -> |a2 .. ar a1>, right is the inverse
StateWord rotate_left(const StateWord& w);
StateWord rotate_right(const StateWord& w);

// exact CP eigenvalue bookkeeping: omega = exp(2*pi*i*num/den), 0<=num<den
struct RootOfUnity {
    int num = 0;
    int den = 1;
    RootOfUnity() = default;
    RootOfUnity(int n, int d);  // reduces; requires d > 0
    std::complex<double> value() const;
    int order() const { return den; }
    bool operator==(const RootOfUnity& o) const { return num == o.num && den == o.den; }
    bool operator<(const RootOfUnity& o) const;  // by angle
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct CPOrbit {
    StateWord rep;                   // lexicographically minimal rotation
    int period = 0;                  // divides r
    std::vector<StateWord> members;  // sigma_right^m(rep), m = 0..period-1
};

// Unnormalized CP eigenvector sum_m omega^m sigma_right^m |rep>, leading
// coefficient 1 on the representative; admitted iff omega^period = 1.
struct SymBasisVector {
    CPOrbit orbit;
    RootOfUnity omega;
};

long subspace_dim(int N, int r, int n);              // enumeration (DP) route
long subspace_dim_multinomial(int N, int r, int n);  // independent multinomial route
std::vector<CPOrbit> enumerate_orbits(int N, int r, int n);
long burnside_orbit_count(int N, int r, int n);  // (1/r) sum_j #fixed(shift^j)
std::vector<SymBasisVector> build_sym_basis(int N, int r, int n);

// omegas admitted for period d within order-r chains, as reduced fractions k/d
std::vector<RootOfUnity> admitted_omegas(int period);

}  // namespace braidlat
