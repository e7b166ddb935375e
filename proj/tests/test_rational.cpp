#include <doctest.h>

#include "cliff/rational.hpp"

using cliff::GaussianRational;
using cliff::Rational;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 1)) == Rational(1));
    CHECK(Rational(7, 3).num() == 7);
    CHECK(Rational(7, 3).den() == 3);
    CHECK(Rational(-7, 3).den() == 3);
}

TEST_CASE("rational parse and print round-trip") {
    for (const char* text : {"0", "3", "-3", "1/2", "-5/7", "22/7"}) {
        const Rational r = Rational::parse(text);
        CHECK(r.str() == text);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), std::invalid_argument);
}

TEST_CASE("gaussian rational field operations") {
    const GaussianRational i = GaussianRational::i();

    CHECK(GaussianRational(Rational(1, 2)) + GaussianRational(Rational(1, 3)) ==
          GaussianRational(Rational(5, 6)));
    CHECK(i * i == GaussianRational(-1));

    const GaussianRational z(Rational(3, 5), Rational(4, 5));
    CHECK(z * z.conj() == GaussianRational(1));

    CHECK(GaussianRational(2).inv() == GaussianRational(Rational(1, 2)));
    CHECK(i.inv() == -i);
    // (1+i)(1/2 - i/2) = 1
    const GaussianRational one_plus_i(Rational(1), Rational(1));
    CHECK(one_plus_i.inv() == GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(one_plus_i * one_plus_i.inv() == GaussianRational(1));
    CHECK_THROWS_AS(GaussianRational().inv(), std::domain_error);
}

TEST_CASE("conjugation fixes reals and is involutive") {
    const GaussianRational z(Rational(1), Rational(2));
    CHECK(z.conj() == GaussianRational(Rational(1), Rational(-2)));
    CHECK(GaussianRational(3).conj() == GaussianRational(3));
    CHECK(GaussianRational().conj() == GaussianRational());
    CHECK(z.conj().conj() == z);
}

TEST_CASE("conjugation is multiplicative and additive") {
    const GaussianRational a(Rational(2, 3), Rational(-1, 4));
    const GaussianRational b(Rational(-5, 2), Rational(7, 6));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.norm() == (a * a.conj()).re());
    CHECK(a.norm() > Rational(0));
}

TEST_CASE("gaussian rational textual form") {
    CHECK(GaussianRational::parse("3").str() == "3");
    CHECK(GaussianRational::parse("1/2") == GaussianRational(Rational(1, 2)));
    CHECK(GaussianRational::parse("-1i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(GaussianRational::parse("1/2+3/4i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
    CHECK(GaussianRational::parse("1/2 - 3/4 i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());

    CHECK(GaussianRational(Rational(0), Rational(1)).str() == "0+1i");
    CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4i");
    CHECK(GaussianRational().str() == "0");

    for (const char* text : {"0", "5", "-7/3", "0+1i", "1/2-3/4i", "2-1i"}) {
        const GaussianRational z = GaussianRational::parse(text);
        CHECK(GaussianRational::parse(z.str()) == z);
        CHECK(z.str() == text);
    }
    CHECK_THROWS_AS(GaussianRational::parse("1+2j"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
}
