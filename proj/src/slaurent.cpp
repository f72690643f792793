#include "braidlat/slaurent.hpp"

#include <cmath>
#include <sstream>

namespace braidlat {

void SLaurent::prune(long key) {
    auto it = terms_.find(key);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

SLaurent SLaurent::s_power(long k, const Rational& c) {
    SLaurent r;
    if (c != 0) r.terms_[k] = c;
    return r;
}

SLaurent SLaurent::q_power(const Rational& e, const Rational& c) {
    Rational twice = 2 * e;
    if (denominator(twice) != 1)
        throw std::invalid_argument("q exponent must be a half-integer: " + to_string(e));
    return s_power(numerator(twice).convert_to<long>(), c);
}

SLaurent& SLaurent::operator+=(const SLaurent& o) {
    for (const auto& [k, c] : o.terms_) {
        terms_[k] += c;
        prune(k);
    }
    return *this;
}

SLaurent& SLaurent::operator-=(const SLaurent& o) {
    for (const auto& [k, c] : o.terms_) {
        terms_[k] -= c;
        prune(k);
    }
    return *this;
}

SLaurent SLaurent::operator*(const SLaurent& o) const {
    SLaurent r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            r.terms_[ka + kb] += ca * cb;
            r.prune(ka + kb);
        }
    return r;
}

SLaurent SLaurent::operator-() const {
    SLaurent r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

SLaurent SLaurent::q_inverted() const {
    SLaurent r;
    for (const auto& [k, c] : terms_) r.terms_[-k] = c;
    return r;
}

double SLaurent::eval(double q0) const {
    if (!(q0 > 0)) throw std::domain_error("SLaurent::eval requires q > 0");
    const double s = std::sqrt(q0);
    double acc = 0.0;
    for (const auto& [k, c] : terms_) acc += to_double(c) * std::pow(s, static_cast<double>(k));
    return acc;
}

namespace {

// prints exponent of s as a q-power: s^k -> q^{k/2}
std::string q_exp_str(long k) {
    if (k % 2 == 0) return std::to_string(k / 2);
    return std::to_string(k) + "/2";
}

}  // namespace

std::string SLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "q^" << q_exp_str(k);
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip() { while (i < s.size() && s[i] == ' ') ++i; }
    bool done() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip(); return s[i++]; }
};

Rational parse_rational(Cursor& c) {
    c.skip();
    std::string num;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) num += c.s[c.i++];
    if (num.empty()) throw std::invalid_argument("SLaurent::parse: expected number in '" + c.s + "'");
    if (c.peek() == '/') {
        c.get();
        std::string den;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) den += c.s[c.i++];
        if (den.empty()) throw std::invalid_argument("SLaurent::parse: bad denominator in '" + c.s + "'");
        return Rational(BigInt(num), BigInt(den));
    }
    return Rational(BigInt(num));
}

// exponent: integer or odd/2, optionally negative
long parse_s_exponent(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') { c.get(); neg = true; }
    Rational e = parse_rational(c);
    if (neg) e = -e;
    Rational twice = 2 * e;
    if (denominator(twice) != 1) throw std::invalid_argument("SLaurent::parse: bad q exponent");
    return numerator(twice).convert_to<long>();
}

}  // namespace

SLaurent SLaurent::parse(const std::string& text) {
    Cursor c{text};
    SLaurent out;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            c.get();
            sign = (p == '-') ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("SLaurent::parse: expected +/- in '" + text + "'");
        }
        first = false;
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_rational(c);
            have_coeff = true;
        }
        long sexp = 0;
        if (c.peek() == '*' || c.peek() == 'q') {
            if (c.peek() == '*') c.get();
            if (c.get() != 'q') throw std::invalid_argument("SLaurent::parse: expected q in '" + text + "'");
            if (c.peek() == '^') {
                c.get();
                sexp = parse_s_exponent(c);
            } else {
                sexp = 2;
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("SLaurent::parse: empty term in '" + text + "'");
        }
        out += s_power(sexp, sign * coeff);
    }
    return out;
}

}  // namespace braidlat
