#pragma once

#include "braidlat/slaurent.hpp"

#include <complex>
#include <vector>

namespace braidlat {

using Complex = std::complex<double>;

// Polynomial in the spectral variable K over SLaurent coefficients.
// Canonical form: trailing zero coefficients trimmed; degree() of zero is -1.
class KPoly {
public:
    KPoly() = default;
    KPoly(const SLaurent& c);
    KPoly(long c) : KPoly(SLaurent(c)) {}

    // the variable K itself, or c*K^p
    static KPoly K(long p = 1, const SLaurent& c = SLaurent(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const SLaurent& coeff(int j) const;  // zero beyond degree

    bool operator==(const KPoly& o) const { return c_ == o.c_; }
    bool operator!=(const KPoly& o) const { return !(*this == o); }

    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    KPoly operator+(const KPoly& o) const { KPoly r = *this; r += o; return r; }
    KPoly operator-(const KPoly& o) const { KPoly r = *this; r -= o; return r; }
    KPoly operator*(const KPoly& o) const;
    KPoly operator-() const;

    KPoly q_inverted() const;

    // homomorphic evaluation; q0 > 0 required
    Complex eval(double q0, Complex K0) const;
    // coefficient of K^1 (the f1 extractor)
    const SLaurent& derivative_at_zero() const { return coeff(1); }

    std::string str() const;
    static KPoly parse(const std::string& text);

    friend KPoly operator*(const SLaurent& c, const KPoly& p) { return KPoly(c) * p; }

private:
    std::vector<SLaurent> c_;  // c_[j] multiplies K^j
    void trim();
};

}  // namespace braidlat
