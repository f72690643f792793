#pragma once

#include "braidlat/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace braidlat {

// Laurent polynomial in the generator s, with s^2 = q, over exact rationals.
// Half-integer powers of q are integer powers of s, so every coefficient the
// model produces lives here exactly. Canonical form: no stored zero terms.
class SLaurent {
public:
    SLaurent() = default;
    SLaurent(const Rational& c) { if (c != 0) terms_[0] = c; }
    SLaurent(long c) : SLaurent(Rational(c)) {}

    // s^k
    static SLaurent s_power(long k, const Rational& c = 1);
    // q^e for rational e with 2e integral
    static SLaurent q_power(const Rational& e, const Rational& c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const SLaurent& o) const { return !(*this == o); }

    SLaurent& operator+=(const SLaurent& o);
    SLaurent& operator-=(const SLaurent& o);
    SLaurent operator+(const SLaurent& o) const { SLaurent r = *this; r += o; return r; }
    SLaurent operator-(const SLaurent& o) const { SLaurent r = *this; r -= o; return r; }
    SLaurent operator*(const SLaurent& o) const;
    SLaurent operator-() const;

    // ring automorphism s^k -> s^{-k}, i.e. q -> q^{-1}
    SLaurent q_inverted() const;

    // evaluation at q = q0 > 0 (s = sqrt(q0))
    double eval(double q0) const;

    // canonical text form, e.g. "q^-1 + 3/2*q^1/2"; exact round trip with parse()
    std::string str() const;
    static SLaurent parse(const std::string& text);

    const std::map<long, Rational>& terms() const { return terms_; }

    friend SLaurent operator*(const Rational& c, const SLaurent& a) { return SLaurent(c) * a; }

private:
    std::map<long, Rational> terms_;  // exponent of s -> coefficient
    void prune(long key);
};

}  // namespace braidlat
