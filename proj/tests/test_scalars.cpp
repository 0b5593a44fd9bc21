#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qheis/render.hpp"
#include "qheis/scalar.hpp"

using namespace qheis;

namespace {

// small random scalars for the algebraic-law checks
Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), coef(-3, 3), expo(-2, 2), hexp(0, 2);
    Scalar s;
    for (int t = nterms(rng); t > 0; --t) {
        Monomial m = Monomial::param("q", expo(rng)) * Monomial::param("hbar", hexp(rng)) *
                     Monomial::param("Q[1,2]", expo(rng));
        s = s + Scalar::monomial(m, GaussianRational(coef(rng), coef(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("addition cancels and merges like terms") {
    Scalar a = Scalar(2) + Scalar::q();  // 2 + q
    CHECK(a + (-Scalar::q()) == Scalar(2));
    CHECK(Scalar::zero() + Scalar::hbar() == Scalar::hbar());
    CHECK(Scalar::q(-1) + Scalar::q(-1) == Scalar(2) * Scalar::q(-1));
}

TEST_CASE("multiplication: inverse pairs, i^2, independent parameters") {
    CHECK(Scalar::q() * Scalar::q(-1) == Scalar::one());
    Scalar ih = Scalar::i() * Scalar::hbar();
    CHECK(ih * ih == -(Scalar::hbar(2)));
    Scalar prod = Scalar::qjk(1, 2) * Scalar::q();
    Scalar expect = Scalar::monomial(Monomial::param("q") * Monomial::param("Q[1,2]"),
                                     GaussianRational(1));
    CHECK(prod == expect);
}

TEST_CASE("q := 1 limit") {
    CHECK((Scalar::one() - Scalar::q(-1)).limit_q1() == Scalar::zero());
    CHECK((Scalar::i() * Scalar::hbar() * Scalar::q()).limit_q1() ==
          Scalar::i() * Scalar::hbar());
    CHECK(Scalar::qjk(1, 2).limit_q1() == Scalar::qjk(1, 2));
}

TEST_CASE("hbar is never inverted") {
    CHECK_THROWS_AS(Scalar::hbar(-1), DomainError);
    CHECK_THROWS_AS(Scalar::hbar() * Scalar::param("hbar", -2), DomainError);
    CHECK_NOTHROW(Scalar::hbar(2) * Scalar::param("hbar", -1));
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("monomial inverses cancel") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar x = random_scalar(rng);
        Monomial y = Monomial::param("q", 2) * Monomial::param("Q[1,2]", -1);
        Scalar ys = Scalar::monomial(y, GaussianRational(1));
        Scalar yinv = Scalar::monomial(y.inverse(), GaussianRational(1));
        CHECK(x * (ys * yinv) == x);
    }
}

TEST_CASE("canonical form never stores zero coefficients") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        for (const Scalar& s : {a + b, a - b, a * b, a - a}) {
            for (const auto& [m, g] : s.terms()) CHECK(!g.is_zero());
        }
    }
}

TEST_CASE("scalar rendering matches the documented grammar") {
    Scalar half_ihq = Scalar::rational(Rational(-1, 2)) * Scalar::i() * Scalar::hbar() *
                      Scalar::q(-1);
    CHECK(render(half_ihq) == "-(1/2)*i*hbar*q^-1");
    CHECK(render(Scalar::rational(Rational(3, 2))) == "3/2");
    CHECK(render(Scalar::i()) == "i");
    CHECK(render(Scalar::qjk(1, 2)) == "Q[1,2]");
    CHECK(render(Scalar::zero()) == "0");
    CHECK(render(Scalar(2) * Scalar::i() * Scalar::hbar()) == "2*i*hbar");
}
