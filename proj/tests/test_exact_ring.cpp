#include "braidlat/kpoly.hpp"

#include <doctest.h>

#include <random>

using namespace braidlat;

namespace {

SLaurent random_slaurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), num(-9, 9), den(1, 7);
    SLaurent a;
    for (int t = nterms(rng); t > 0; --t)
        a += SLaurent::s_power(expo(rng), Rational(num(rng), den(rng)));
    return a;
}

KPoly random_kpoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    KPoly p;
    const int d = deg(rng);
    for (int j = 0; j <= d; ++j) p += KPoly::K(j, random_slaurent(rng));
    return p;
}

}  // namespace

TEST_SUITE("exact_ring") {

TEST_CASE("slaurent basic identities") {
    const SLaurent s2 = SLaurent::s_power(2), sm2 = SLaurent::s_power(-2);
    CHECK((s2 + sm2) + SLaurent() == s2 + sm2);
    const SLaurent s = SLaurent::s_power(1), si = SLaurent::s_power(-1);
    CHECK((s + si) * (s - si) == s2 - sm2);
    // q + 1/q + 1 at q=1 evaluates to 3
    const SLaurent c = s2 + sm2 + SLaurent(1);
    CHECK(c.eval(1.0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 1000; ++it) {
        const SLaurent a = random_slaurent(rng), b = random_slaurent(rng), c = random_slaurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int it = 0; it < 1000; ++it) {
        const KPoly a = random_kpoly(rng), b = random_kpoly(rng), c = random_kpoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("q inversion is an involutive automorphism") {
    std::mt19937_64 rng(7);
    CHECK(SLaurent::s_power(1).q_inverted() == SLaurent::s_power(-1));
    const SLaurent sym = SLaurent::s_power(2) + SLaurent::s_power(-2) + SLaurent(1);
    CHECK(sym.q_inverted() == sym);
    for (int it = 0; it < 200; ++it) {
        const SLaurent a = random_slaurent(rng), b = random_slaurent(rng);
        CHECK(a.q_inverted().q_inverted() == a);
        CHECK((a * b).q_inverted() == a.q_inverted() * b.q_inverted());
        CHECK((a + b).q_inverted() == a.q_inverted() + b.q_inverted());
        // eval(invert(a), q) == eval(a, 1/q)
        CHECK(a.q_inverted().eval(1.7) == doctest::Approx(a.eval(1.0 / 1.7)).epsilon(1e-12));
    }
}

TEST_CASE("evaluation commutes with arithmetic") {
    std::mt19937_64 rng(11);
    const double qs[] = {0.5, 1.0, 2.0};
    const Complex Ks[] = {{-0.5, 0.0}, {0.3, 0.0}, {1.0, 0.0}};
    for (int it = 0; it < 200; ++it) {
        const KPoly a = random_kpoly(rng), b = random_kpoly(rng);
        for (double q : qs)
            for (Complex K : Ks) {
                const Complex prod = (a * b).eval(q, K);
                const Complex sum = (a + b).eval(q, K);
                CHECK(std::abs(prod - a.eval(q, K) * b.eval(q, K)) <=
                      1e-12 * (1.0 + std::abs(prod)));
                CHECK(std::abs(sum - (a.eval(q, K) + b.eval(q, K))) <=
                      1e-12 * (1.0 + std::abs(sum)));
            }
    }
}

TEST_CASE("kpoly evaluation examples") {
    KPoly p = KPoly::K(2) + KPoly(1);
    CHECK(p.eval(1.0, 1.0) == Complex(2.0, 0.0));
    CHECK(p.eval(0.7, 0.0) == Complex(1.0, 0.0));
    for (int r = 2; r <= 5; ++r) {
        const KPoly one_kr = KPoly(1) + KPoly::K(r);
        CHECK(one_kr.eval(1.9, 0.0) == Complex(1.0, 0.0));
        CHECK(one_kr.derivative_at_zero().is_zero());
    }
    // -(K^2 + (q + 1/q - 2)K + 1) at q=1, K=1 -> -2
    const SLaurent qq = SLaurent::s_power(2) + SLaurent::s_power(-2);
    const KPoly branch = -(KPoly::K(2) + KPoly::K(1, qq - SLaurent(2)) + KPoly(1));
    CHECK(branch.eval(1.0, 1.0) == Complex(-2.0, 0.0));
    CHECK((KPoly::K(2) + KPoly(1)).derivative_at_zero().is_zero());
    const KPoly third = KPoly::K(2) + KPoly::K(1, qq + SLaurent(4)) + KPoly(1);
    CHECK(third.derivative_at_zero() == qq + SLaurent(4));
    CHECK_THROWS_AS(p.eval(-1.0, 0.0), std::domain_error);
}

TEST_CASE("canonical text round trip") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 300; ++it) {
        const SLaurent a = random_slaurent(rng);
        CHECK(SLaurent::parse(a.str()) == a);
        const KPoly p = random_kpoly(rng);
        CHECK(KPoly::parse(p.str()) == p);
    }
    CHECK(SLaurent().str() == "0");
    const KPoly sample = KPoly::K(2, SLaurent::s_power(-2)) + KPoly(3);
    CHECK(sample.str() == "q^-1*K^2 + 3");
    CHECK(KPoly::parse("q^-1*K^2 + 3") == sample);
}

}  // TEST_SUITE
