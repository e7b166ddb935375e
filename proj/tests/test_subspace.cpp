#include <doctest.h>

#include "cliff/random_gen.hpp"
#include "cliff/subspace.hpp"

using namespace cliff;

namespace {
const GaussianRational kI = GaussianRational::i();

CoordRow row(std::initializer_list<int> entries) {
    CoordRow r;
    for (int v : entries) r.push_back(GaussianRational(v));
    return r;
}
}  // namespace

TEST_CASE("span reduces to a canonical basis") {
    const Subspace s = Subspace::span(2, {row({1, 0}), row({2, 0})});
    CHECK(s.dim() == 1);
    CHECK(s == Subspace::span(2, {row({1, 0})}));

    CHECK(Subspace::zero(2).dim() == 0);

    // (i, 1) = i * (1, -i)
    const Subspace w = Subspace::span(2, {{GaussianRational(1), -kI}, {kI, GaussianRational(1)}});
    CHECK(w.dim() == 1);

    CHECK_THROWS_AS(Subspace::span(2, {row({1, 0, 0})}), std::invalid_argument);
}

TEST_CASE("orthogonal complement under the bilinear form") {
    CHECK(Subspace::span(2, {row({1, 0})}).orthogonal_complement() ==
          Subspace::span(2, {row({0, 1})}));
    CHECK(Subspace::zero(2).orthogonal_complement() == Subspace::full(2));

    // the isotropic line W = span{(1, -i)} satisfies W-perp = W
    const Subspace w = Subspace::span(2, {{GaussianRational(1), -kI}});
    CHECK(w.orthogonal_complement() == w);
    CHECK(bilinear_form(std::span<const GaussianRational>(w.basis()[0]),
                        std::span<const GaussianRational>(w.basis()[0]))
              .is_zero());
}

TEST_CASE("intersection and sum") {
    const Subspace x = Subspace::span(3, {row({1, 0, 0}), row({0, 1, 0})});
    const Subspace y = Subspace::span(3, {row({0, 1, 0}), row({0, 0, 1})});
    CHECK(intersect(x, y) == Subspace::span(3, {row({0, 1, 0})}));
    CHECK(intersect(x, x) == x);

    const Subspace wm = Subspace::span(2, {{GaussianRational(1), -kI}});
    const Subspace wp = Subspace::span(2, {{GaussianRational(1), kI}});
    CHECK(intersect(wm, wp).dim() == 0);

    CHECK(sum(Subspace::span(2, {row({1, 0})}), Subspace::span(2, {row({0, 1})})) == Subspace::full(2));
    CHECK_THROWS_AS(intersect(Subspace::zero(2), Subspace::zero(3)), std::invalid_argument);
}

TEST_CASE("membership and conjugate") {
    const Subspace s = Subspace::span(2, {row({1, 0}), row({0, 1})});
    CHECK(s.member(row({1, 1})));
    CHECK(Subspace::span(2, {row({1, 0})}).member(row({3, 0})));
    CHECK_FALSE(Subspace::span(2, {row({1, 0})}).member(row({0, 1})));

    const Subspace w = Subspace::span(2, {{GaussianRational(1), -kI}});
    CHECK(w.conj() == Subspace::span(2, {{GaussianRational(1), kI}}));
    CHECK(w.conj().conj() == w);
}

TEST_CASE("orthogonal projection onto a real subspace") {
    const Subspace n1 = Subspace::span(2, {row({1, 1})});
    const Subspace x1 = Subspace::span(2, {row({1, 0})});
    CHECK(orthogonal_projection_onto(n1, x1) == x1);

    const Subspace n2 = Subspace::span(3, {row({1, 0, 0})});
    const Subspace x2 = Subspace::span(3, {row({1, 0, 0}), row({0, 1, 0})});
    CHECK(orthogonal_projection_onto(n2, x2) == n2);  // N inside X

    const Subspace n3 = Subspace::span(3, {row({1, 1, 1})});
    CHECK(orthogonal_projection_onto(n3, x2) == Subspace::span(3, {row({1, 1, 0})}));

    // span{(i,0)} reduces to the real span{(1,0)}; a genuinely non-real
    // line needs a complex ratio between coordinates
    CHECK(Subspace::span(2, {{kI, GaussianRational(0)}}).is_real());
    const Subspace complex_s = Subspace::span(2, {{GaussianRational(1), kI}});
    CHECK_FALSE(complex_s.is_real());
    CHECK_THROWS_AS(orthogonal_projection_onto(complex_s, x1), std::invalid_argument);
}

TEST_CASE("orthogonalize: unnormalized Gram-Schmidt") {
    const auto basic = orthogonalize(std::vector<CoordRow>{row({1, 0}), row({1, 1})});
    REQUIRE(basic.size() == 2);
    CHECK(basic[0] == row({1, 0}));
    CHECK(basic[1] == row({0, 1}));

    const auto single = orthogonalize(std::vector<CoordRow>{row({1, 1})});
    REQUIRE(single.size() == 1);
    CHECK(bilinear_form(std::span<const GaussianRational>(single[0]),
                        std::span<const GaussianRational>(single[0])) == GaussianRational(2));

    // one Gram-Schmidt step: {(1,1,0),(1,0,1)} -> {(1,1,0),(1/2,-1/2,1)}
    const auto pair = orthogonalize(std::vector<CoordRow>{row({1, 1, 0}), row({1, 0, 1})});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == row({1, 1, 0}));
    const CoordRow expected = {GaussianRational(Rational(1, 2)), GaussianRational(Rational(-1, 2)),
                               GaussianRational(1)};
    CHECK(pair[1] == expected);
}

TEST_CASE("subspace invariants on random inputs") {
    SeededRng rng(5150);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const int d = static_cast<int>(rng.below(n + 1));
            const Subspace w = random_subspace(n, d, rng, 4);
            CHECK(w.dim() == d);
            const Subspace perp = w.orthogonal_complement();
            CHECK(w.dim() + perp.dim() == n);
            CHECK(perp.orthogonal_complement() == w);

            // real subspaces meet their complement trivially
            const Subspace z = random_subspace(n, d, rng, 4, true);
            CHECK(intersect(z, z.orthogonal_complement()).dim() == 0);

            // De Morgan
            const Subspace y = random_subspace(n, static_cast<int>(rng.below(n + 1)), rng, 4);
            CHECK(sum(w, y).orthogonal_complement() ==
                  intersect(w.orthogonal_complement(), y.orthogonal_complement()));

            // orthogonalize: same span, pairwise orthogonal, positive self-pairings
            const auto ortho = orthogonalize(z);
            CHECK(Subspace::span(n, ortho) == z);
            for (size_t i = 0; i < ortho.size(); ++i) {
                const GaussianRational self = bilinear_form(std::span<const GaussianRational>(ortho[i]),
                                                            std::span<const GaussianRational>(ortho[i]));
                CHECK(self.is_real());
                CHECK(self.re() > Rational(0));
                for (size_t j = i + 1; j < ortho.size(); ++j)
                    CHECK(bilinear_form(std::span<const GaussianRational>(ortho[i]),
                                        std::span<const GaussianRational>(ortho[j]))
                              .is_zero());
            }
        }
    }
}
