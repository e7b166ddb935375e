#include <doctest.h>

#include "cliff/multivector.hpp"
#include "cliff/random_gen.hpp"
#include "oracle_helpers.hpp"

using namespace cliff;

namespace {
const GaussianRational kI = GaussianRational::i();

Multivector e(int dim, int index) { return Multivector::blade(dim, BladeMask(1) << (index - 1)); }
}  // namespace

TEST_CASE("blade products: generator relations") {
    SUBCASE("e1 * e1 = 1") {
        const auto p = blade_product(0b001, 0b001);
        CHECK(p.sign == 1);
        CHECK(p.mask == 0);
    }
    SUBCASE("e2 * e1 = -e1e2") {
        const auto p = blade_product(0b010, 0b001);
        CHECK(p.sign == -1);
        CHECK(p.mask == 0b011);
    }
    SUBCASE("e1e2 * e2e3 = e1e3") {
        const auto p = blade_product(0b011, 0b110);
        CHECK(p.sign == 1);
        CHECK(p.mask == 0b101);
    }
}

TEST_CASE("blade products match the string-rewriting oracle exhaustively") {
    for (int n = 0; n <= 4; ++n) {
        for (BladeMask x = 0; x < (BladeMask(1) << n); ++x) {
            for (BladeMask y = 0; y < (BladeMask(1) << n); ++y) {
                const auto engine = blade_product(x, y);
                const auto [sign, mask] = oracle::blade_product_oracle(x, y);
                CHECK(engine.sign == sign);
                CHECK(engine.mask == mask);
            }
        }
    }
}

TEST_CASE("multivector multiplication") {
    const int n = 2;
    const Multivector v = e(n, 1) + e(n, 2);
    CHECK(v * v == Multivector::scalar(n, GaussianRational(2)));
    const Multivector a = e(n, 1) + Multivector::blade(n, 0b11, GaussianRational(Rational(5)));
    CHECK(Multivector::unit(n) * a == a);
    CHECK(a * Multivector::unit(n) == a);
    // the isotropic vector e1 - i e2 squares to zero
    const Multivector w = e(n, 1) - e(n, 2) * kI;
    CHECK((w * w).is_zero());
    CHECK_THROWS_AS(e(2, 1) * e(3, 1), std::invalid_argument);
}

TEST_CASE("grading automorphism") {
    const int n = 2;
    CHECK(e(n, 1).gamma() == -e(n, 1));
    CHECK(Multivector::blade(n, 0b11).gamma() == Multivector::blade(n, 0b11));
    const Multivector a =
        Multivector::unit(n) + e(n, 1) + Multivector::blade(n, 0b11, GaussianRational(3));
    CHECK(a.gamma() == Multivector::unit(n) - e(n, 1) + Multivector::blade(n, 0b11, GaussianRational(3)));
    CHECK(a.gamma().gamma() == a);
    CHECK(a.even_part() + a.odd_part() == a);
}

TEST_CASE("star involution") {
    const int n = 2;
    CHECK((e(n, 1) * kI).star() == e(n, 1) * (-kI));
    CHECK(Multivector::blade(n, 0b11).star() == -Multivector::blade(n, 0b11));
    CHECK(Multivector::unit(n).star() == Multivector::unit(n));
}

TEST_CASE("bar conjugation") {
    const int n = 2;
    const GaussianRational one_plus_i(Rational(1), Rational(1));
    CHECK((e(n, 1) * one_plus_i).bar() == e(n, 1) * one_plus_i.conj());
    CHECK(Multivector::blade(n, 0b11).bar() == Multivector::blade(n, 0b11));
    const Multivector w = e(n, 1) - e(n, 2) * kI;
    CHECK(w.bar() == e(n, 1) + e(n, 2) * kI);
}

TEST_CASE("trace picks the scalar coefficient") {
    const int n = 2;
    CHECK(Multivector::unit(n).trace() == GaussianRational(1));
    CHECK(Multivector::blade(n, 0b11).trace() == GaussianRational(0));
    const Multivector a = Multivector::scalar(n, GaussianRational(5)) + e(n, 1) * GaussianRational(2);
    CHECK(a.trace() == GaussianRational(5));
}

TEST_CASE("trace inner product") {
    const int n = 2;
    CHECK(trace_inner(e(n, 1), e(n, 1)) == GaussianRational(1));
    CHECK(trace_inner(e(n, 1), e(n, 2)) == GaussianRational(0));
    const Multivector iu = Multivector::unit(n) * kI;
    CHECK(trace_inner(iu, iu) == GaussianRational(1));
}

TEST_CASE("vector embedding and the two forms") {
    const int n = 2;
    const std::vector<GaussianRational> c1 = {GaussianRational(1), GaussianRational(0)};
    CHECK(Multivector::vector(c1) == e(n, 1));
    const std::vector<GaussianRational> c0 = {GaussianRational(0), GaussianRational(0)};
    CHECK(Multivector::vector(c0).is_zero());
    const std::vector<GaussianRational> cw = {GaussianRational(1), -kI};
    const Multivector w = Multivector::vector(cw);
    CHECK(w == e(n, 1) - e(n, 2) * kI);

    CHECK(bilinear_form(e(n, 1), e(n, 1)) == GaussianRational(1));
    CHECK(bilinear_form(w, w) == GaussianRational(0));
    CHECK(bilinear_form(e(n, 1), e(n, 2)) == GaussianRational(0));

    CHECK(hermitian_form(w, w) == GaussianRational(2));
    CHECK(hermitian_form(e(n, 1), e(n, 2)) == GaussianRational(0));
    CHECK(hermitian_form(e(n, 1) * kI, e(n, 1) * kI) == GaussianRational(1));

    CHECK_THROWS_AS(bilinear_form(Multivector::blade(n, 0b11), e(n, 1)), std::invalid_argument);
}

TEST_CASE("randomized algebra laws") {
    SeededRng rng(2024);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const Multivector a = rng.multivector(n, 6, 4);
            const Multivector b = rng.multivector(n, 6, 4);
            const Multivector c = rng.multivector(n, 6, 4);

            CHECK((a * b) * c == a * (b * c));
            CHECK((a * b).gamma() == a.gamma() * b.gamma());
            CHECK((a * b).star() == b.star() * a.star());
            CHECK(a.star().star() == a);
            CHECK(a.bar().bar() == a);
            CHECK((a * b).bar() == a.bar() * b.bar());

            // tracial and gamma-invariant
            CHECK((a * b).trace() == (b * a).trace());
            CHECK(a.gamma().trace() == a.trace());

            // Hermitian property of the trace inner product
            CHECK(trace_inner(a, b) == trace_inner(b, a).conj());
            const GaussianRational norm = trace_inner(a, a);
            CHECK(norm.is_real());
            CHECK(norm.re() >= Rational(0));
            CHECK((norm.is_zero()) == a.is_zero());

            // Clifford relation and anticommutator on vectors
            const Multivector x = Multivector::vector(rng.coord_row(n, 4));
            const Multivector y = Multivector::vector(rng.coord_row(n, 4));
            CHECK(x * x == Multivector::scalar(n, bilinear_form(x, x)));
            CHECK(x * y + y * x == Multivector::scalar(n, GaussianRational(2) * bilinear_form(x, y)));
        }
    }
}

TEST_CASE("canonical text form round-trips") {
    const int n = 3;
    const Multivector a = Multivector::scalar(n, GaussianRational(Rational(1, 2))) +
                          Multivector::blade(n, 0b101, kI);
    CHECK(a.str() == "(1/2)*1 + (0+1i)*e1e3");
    CHECK(Multivector::parse(a.str(), n) == a);
    CHECK(Multivector::zero(n).str() == "0");
    CHECK(Multivector::parse("0", n) == Multivector::zero(n));

    SeededRng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const Multivector m = rng.multivector(n, 6, 5);
        CHECK(Multivector::parse(m.str(), n) == m);
    }
    CHECK_THROWS_AS(Multivector::parse("(1)*e9", 3), std::invalid_argument);
    CHECK_THROWS_AS(Multivector::parse("oops", 3), std::invalid_argument);
}
