#include "braidlat/kpoly.hpp"

#include <sstream>

namespace braidlat {

namespace {
const SLaurent kZero{};
}

KPoly::KPoly(const SLaurent& c) {
    if (!c.is_zero()) c_.push_back(c);
}

KPoly KPoly::K(long p, const SLaurent& c) {
    KPoly r;
    if (c.is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(p) + 1, SLaurent());
    r.c_[static_cast<std::size_t>(p)] = c;
    return r;
}

const SLaurent& KPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(j)];
}

void KPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly& KPoly::operator+=(const KPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

KPoly KPoly::operator*(const KPoly& o) const {
    KPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, SLaurent());
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) {
            if (o.c_[b].is_zero()) continue;
            r.c_[a + b] += c_[a] * o.c_[b];
        }
    }
    r.trim();
    return r;
}

KPoly KPoly::operator-() const {
    KPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

KPoly KPoly::q_inverted() const {
    KPoly r = *this;
    for (auto& c : r.c_) c = c.q_inverted();
    return r;
}

Complex KPoly::eval(double q0, Complex K0) const {
    if (!(q0 > 0)) throw std::domain_error("KPoly::eval requires q > 0");
    Complex acc = 0.0;
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * K0 + c_[j].eval(q0);
    return acc;
}

std::string KPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j].is_zero()) continue;
        const bool monomial = c_[j].terms().size() == 1;
        // monomials join with " - " when negative; multi-term coefficients
        // keep their signs inside parentheses
        const bool pull_sign = monomial && c_[j].terms().begin()->second < 0;
        const SLaurent body = pull_sign ? -c_[j] : c_[j];
        if (j == 0 && !monomial) {
            if (first) os << c_[j].str();
            else os << " + (" << c_[j].str() << ")";
            first = false;
            continue;
        }
        if (first) os << (pull_sign ? "-" : "");
        else os << (pull_sign ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << body.str();
        } else {
            if (monomial) {
                const std::string cs = body.str();
                if (cs != "1") os << cs << "*";
            } else {
                os << "(" << body.str() << ")*";
            }
            os << "K";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

KPoly KPoly::parse(const std::string& text) {
    // terms join at depth-0 " + " / " - "; loose SLaurent fragments sum
    // correctly since those are the only joiners
    KPoly out;
    std::size_t i = 0;
    int sign = 1;
    while (i < text.size()) {
        int depth = 0;
        std::size_t j = i;
        int next_sign = 1;
        bool found = false;
        for (; j < text.size(); ++j) {
            if (text[j] == '(') ++depth;
            else if (text[j] == ')') --depth;
            else if (depth == 0 && (text.compare(j, 3, " + ") == 0 || text.compare(j, 3, " - ") == 0)) {
                next_sign = text[j + 1] == '-' ? -1 : 1;
                found = true;
                break;
            }
        }
        std::string term = text.substr(i, j - i);
        i = found ? j + 3 : text.size();
        int tsign = sign;
        sign = next_sign;
        if (!term.empty() && term.front() == '-') {
            tsign = -tsign;
            term.erase(0, 1);
        }
        const std::size_t kpos = term.find('K');  // K never occurs inside a coefficient
        SLaurent coeff;
        long p = 0;
        if (kpos == std::string::npos) {
            if (!term.empty() && term.front() == '(') term = term.substr(1, term.size() - 2);
            coeff = SLaurent::parse(term);
        } else {
            p = 1;
            if (kpos + 1 < term.size() && term[kpos + 1] == '^') p = std::stol(term.substr(kpos + 2));
            std::string cs = term.substr(0, kpos);
            while (!cs.empty() && (cs.back() == '*' || cs.back() == ' ')) cs.pop_back();
            if (cs.empty()) coeff = SLaurent(1);
            else if (cs.front() == '(') coeff = SLaurent::parse(cs.substr(1, cs.size() - 2));
            else coeff = SLaurent::parse(cs);
        }
        if (tsign < 0) coeff = -coeff;
        out += KPoly::K(p, coeff);
    }
    return out;
}

}  // namespace braidlat
