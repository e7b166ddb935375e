#include <doctest.h>

#include "cliff/duality.hpp"
#include "cliff/random_gen.hpp"

using namespace cliff;

namespace {
const GaussianRational kI = GaussianRational::i();

CoordRow row(std::initializer_list<int> entries) {
    CoordRow r;
    for (int v : entries) r.push_back(GaussianRational(v));
    return r;
}

Multivector e(int dim, int index) { return Multivector::blade(dim, BladeMask(1) << (index - 1)); }
}  // namespace

TEST_CASE("subalgebra span dimensions") {
    CHECK(subalgebra_span(Subspace::zero(2)) == AlgebraSubspace::scalars(2));

    const AlgebraSubspace c_e1 = subalgebra_span(Subspace::span(2, {row({1, 0})}));
    CHECK(c_e1.dim() == 2);
    CHECK(c_e1.contains(Multivector::unit(2)));
    CHECK(c_e1.contains(e(2, 1)));

    // isotropic line: C(W) = span{1, e1 - i e2}, no new products
    const Subspace w = Subspace::span(2, {{GaussianRational(1), -kI}});
    const AlgebraSubspace cw = subalgebra_span(w);
    CHECK(cw.dim() == 2);
    CHECK(cw.contains(e(2, 1) - e(2, 2) * kI));

    CHECK(subalgebra_span(Subspace::full(3)).dim() == 8);
}

TEST_CASE("supercommutant by exact kernel") {
    // no constraints: the whole algebra
    CHECK(supercommutant(Subspace::zero(2)).dim() == 4);

    // W = span{e1} in n=2: C(W)' = span{1, e2}
    const AlgebraSubspace c = supercommutant(Subspace::span(2, {row({1, 0})}));
    CHECK(c.dim() == 2);
    CHECK(c.contains(Multivector::unit(2)));
    CHECK(c.contains(e(2, 2)));
    CHECK_FALSE(c.contains(e(2, 1)));

    // scalar supercentre in n=2
    CHECK(supercommutant(Subspace::full(2)) == AlgebraSubspace::scalars(2));
}

TEST_CASE("supercommutant elements satisfy the twisted relation") {
    SeededRng rng(31);
    for (int n = 1; n <= 4; ++n) {
        const int d = static_cast<int>(rng.below(n + 1));
        const Subspace w = random_subspace(n, d, rng, 3);
        const AlgebraSubspace c = supercommutant(w);
        for (const auto& a : c.basis())
            for (const auto& gen : w.basis_vectors()) CHECK(gen * a == a.gamma() * gen);
    }
}

TEST_CASE("twisted duality on the named subspaces") {
    SUBCASE("W = span{e1} in n=3") {
        const DualityReport r = verify_twisted_duality(Subspace::span(3, {row({1, 0, 0})}));
        CHECK(r.equal);
        CHECK(r.dim_supercommutant == 4);
        CHECK(r.dim_subalgebra == 4);
    }
    SUBCASE("isotropic W with W-perp = W in n=2") {
        const Subspace w = Subspace::span(2, {{GaussianRational(1), -kI}});
        const DualityReport r = verify_twisted_duality(w);
        CHECK(r.equal);
        CHECK(r.complement_equals_w);
        CHECK(r.dim_supercommutant == 2);
        // C(W)' = C(W) here
        CHECK(supercommutant(w) == subalgebra_span(w));
    }
    SUBCASE("W = V_C") {
        const DualityReport r = verify_twisted_duality(Subspace::full(3));
        CHECK(r.equal);
        CHECK(r.dim_supercommutant == 1);
    }
}

TEST_CASE("easy inclusion holds constructively") {
    SeededRng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const Subspace w = random_subspace(n, static_cast<int>(rng.below(n + 1)), rng, 3);
        const AlgebraSubspace span_perp = subalgebra_span(w.orthogonal_complement());
        for (const auto& a : span_perp.basis())
            for (const auto& gen : w.basis_vectors()) CHECK(gen * a == a.gamma() * gen);
    }
}

TEST_CASE("supercommutant splits along the grading") {
    SeededRng rng(23);
    const int n = 3;
    const Subspace w = random_subspace(n, 1, rng, 3);
    const AlgebraSubspace c = supercommutant(w);
    for (const auto& a : c.basis()) {
        CHECK(c.contains(a.even_part()));
        CHECK(c.contains(a.odd_part()));
        // even part commutes, odd part twists: b a = a gamma(b)
        const AlgebraSubspace cw = subalgebra_span(w);
        for (const auto& b : cw.basis()) {
            CHECK(b * a.even_part() == a.even_part() * b);
            CHECK(b * a.odd_part() == a.odd_part() * b.gamma());
        }
    }
}

TEST_CASE("hyperplane decomposition") {
    SUBCASE("base cases") {
        const CoordRow w = row({1, 0});
        const HyperplaneSplit unit_split = hyperplane_decompose(Multivector::unit(2), w);
        CHECK(unit_split.a == Multivector::unit(2));
        CHECK(unit_split.b.is_zero());

        const HyperplaneSplit wbar_split = hyperplane_decompose(e(2, 1), w);  // bar(e1) = e1
        CHECK(wbar_split.a.is_zero());
        CHECK(wbar_split.b == Multivector::unit(2));
    }
    SUBCASE("n=2, w=e1, c=e1e2 -> (0, e2)") {
        const HyperplaneSplit split = hyperplane_decompose(Multivector::blade(2, 0b11), row({1, 0}));
        CHECK(split.a.is_zero());
        CHECK(split.b == e(2, 2));
    }
    SUBCASE("zero vector rejected") {
        CHECK_THROWS_AS(hyperplane_decompose(Multivector::unit(2), row({0, 0})), std::invalid_argument);
    }
}

TEST_CASE("hyperplane decomposition: reconstruction, membership, uniqueness") {
    SeededRng rng(41);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const CoordRow w = rng.nonzero_coord_row(n, 3);
            const Multivector c = rng.multivector(n, 6, 3);
            const HyperplaneSplit split = hyperplane_decompose(c, w);

            CoordRow wbar(w.size());
            for (size_t i = 0; i < w.size(); ++i) wbar[i] = w[i].conj();
            CHECK(split.a + Multivector::vector(wbar) * split.b == c);

            const AlgebraSubspace perp = subalgebra_span(Subspace::span(n, {w}).orthogonal_complement());
            CHECK(perp.contains(split.a));
            CHECK(perp.contains(split.b));

            const auto solved = hyperplane_decompose_by_solve(c, w);
            REQUIRE(solved.has_value());
            CHECK(solved->a == split.a);
            CHECK(solved->b == split.b);
        }
    }
}

TEST_CASE("algebra intersections") {
    const AlgebraSubspace a = subalgebra_span(Subspace::span(3, {row({1, 0, 0}), row({0, 1, 0})}));
    const AlgebraSubspace b = subalgebra_span(Subspace::span(3, {row({0, 1, 0}), row({0, 0, 1})}));
    const AlgebraSubspace meet = intersect_algebra(a, b);
    CHECK(meet == subalgebra_span(Subspace::span(3, {row({0, 1, 0})})));
    CHECK(meet.dim() == 2);

    CHECK(intersect_algebra(a, a) == a);

    const AlgebraSubspace c1 = subalgebra_span(Subspace::span(2, {row({1, 0})}));
    const AlgebraSubspace c2 = subalgebra_span(Subspace::span(2, {row({0, 1})}));
    CHECK(intersect_algebra(c1, c2) == AlgebraSubspace::scalars(2));
}

TEST_CASE("intersection theorem") {
    SUBCASE("singleton family is trivial") {
        const IntersectionReport r = verify_intersection_theorem({Subspace::span(2, {row({1, 1})})});
        CHECK(r.equal);
    }
    SUBCASE("named triple in n=4") {
        const std::vector<Subspace> family = {
            Subspace::span(4, {row({1, 0, 0, 0}), row({0, 1, 0, 0})}),
            Subspace::span(4, {row({0, 1, 0, 0}), row({0, 0, 1, 0})}),
            Subspace::span(4, {row({0, 1, 0, 0}), row({0, 0, 0, 1})})};
        const IntersectionReport r = verify_intersection_theorem(family);
        CHECK(r.equal);
        CHECK(r.dim_algebra_side == 2);  // C(span{e2})
    }
    SUBCASE("random pairs in n=4") {
        SeededRng rng(59);
        for (int trial = 0; trial < 6; ++trial) {
            const std::vector<Subspace> family = {
                random_subspace(4, static_cast<int>(rng.below(5)), rng, 3),
                random_subspace(4, static_cast<int>(rng.below(5)), rng, 3)};
            CHECK(verify_intersection_theorem(family).equal);
        }
    }
}

TEST_CASE("supercentre is scalar in every dimension") {
    for (int n = 0; n <= 4; ++n) {
        const AlgebraSubspace centre = supercentre(n);
        CHECK(centre.dim() == 1);
        CHECK(centre == AlgebraSubspace::scalars(n));
    }
}

TEST_CASE("basis independence of span and supercommutant") {
    SeededRng rng(67);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const int d = 1 + static_cast<int>(rng.below(n));
        const Subspace w = random_subspace(n, d, rng, 3);
        const auto gens = recombined_basis(w, rng, 3);
        CHECK(Subspace::span(n, gens) == w);
        CHECK(supercommutant_from_generators(n, gens) == supercommutant(w));
        CHECK(subalgebra_span_from_generators(n, gens) == subalgebra_span(w));
    }
}

TEST_CASE("duality report carries a witness when the sides differ") {
    // The theorem never fails, so exercise the reporting path on a
    // deliberately mismatched computation.
    const Subspace w = Subspace::span(2, {row({1, 0})});
    const DualityComputation wrong{w.orthogonal_complement(),
                                   supercommutant(w),
                                   AlgebraSubspace::scalars(2)};
    const DualityReport r = wrong.report(w);
    CHECK_FALSE(r.equal);
    REQUIRE(r.counterexample.has_value());
    // the witness is a multivector in one side and not the other
    const Multivector witness = Multivector::parse(*r.counterexample, 2);
    CHECK(supercommutant(w).contains(witness));
    CHECK_FALSE(AlgebraSubspace::scalars(2).contains(witness));
}

TEST_CASE("supercommutant agrees with the intersection route") {
    SeededRng rng(73);
    for (int n = 0; n <= 4; ++n) {
        for (int d = 0; d <= n; ++d) {
            const Subspace w = random_subspace(n, d, rng, 3);
            CHECK(supercommutant_by_intersection(w) == supercommutant(w));
        }
    }
}
