#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/subspace.hpp"

namespace cliff {

/// A linear subspace of the 2^n-dimensional algebra C(V_C), stored as a
/// reduced basis of multivectors over the mask-ordered blade coordinates.
/// Canonical: equal subspaces compare equal structurally.
class AlgebraSubspace {
public:
    static AlgebraSubspace span(int ambient_dim, const std::vector<Multivector>& elements);
    static AlgebraSubspace scalars(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Multivector>& basis() const { return basis_; }

    bool contains(const Multivector& a) const;
    bool operator==(const AlgebraSubspace& o) const;
    bool operator!=(const AlgebraSubspace& o) const { return !(*this == o); }

private:
    explicit AlgebraSubspace(int ambient_dim) : ambient_dim_(ambient_dim) {}

    int ambient_dim_;
    std::vector<Multivector> basis_;
};

AlgebraSubspace intersect_algebra(const AlgebraSubspace& a, const AlgebraSubspace& b);

SparseRow multivector_to_row(const Multivector& a);
Multivector multivector_from_row(const SparseRow& row, int dim);

/// C(Z) as a subspace of the algebra: the span of the ordered products
/// z_{k1}...z_{kr}, k1 < ... < kr, over a basis {z_k} of Z. Dimension is
/// exactly 2^dim(Z); the products' independence is asserted, not assumed.
AlgebraSubspace subalgebra_span(const Subspace& z);

/// The supercommutant C(W)' = { a : w a = gamma(a) w for all w in W },
/// computed as the exact kernel of the combined linear system over the
/// 2^n blade coefficients, one block of equations per basis vector of W.
AlgebraSubspace supercommutant(const Subspace& w);

/// The same space via the per-vector route C(W)' = meet_w C(w-perp),
/// folding algebra intersections over the basis of W. Cross-check path;
/// the direct kernel is the engine.
AlgebraSubspace supercommutant_by_intersection(const Subspace& w);

/// Same constructions driven by raw generator rows instead of the
/// canonical basis: the results must not depend on the generating set.
AlgebraSubspace supercommutant_from_generators(int n, const std::vector<CoordRow>& generators);
AlgebraSubspace subalgebra_span_from_generators(int n, const std::vector<CoordRow>& generators);

/// The supercommutant of the full space; always the scalars.
AlgebraSubspace supercentre(int n);

struct DualityReport {
    bool equal = false;
    int dim_supercommutant = 0;
    int dim_subalgebra = 0;
    bool complement_equals_w = false;  // notes the isotropic W-perp = W case
    std::optional<std::string> counterexample;
};

/// Both sides of the duality statement, kept for reuse by callers that
/// need the computed spaces as well as the verdict.
struct DualityComputation {
    Subspace complement;
    AlgebraSubspace commutant;  // exact kernel route
    AlgebraSubspace expected;   // subalgebra span of the complement
    DualityReport report(const Subspace& w) const;
};

DualityComputation compute_twisted_duality(const Subspace& w);

/// Twisted duality: supercommutant(W) == subalgebra_span(W-perp), both
/// computed independently. On failure the report carries a basis
/// multivector witnessing the difference.
DualityReport verify_twisted_duality(const Subspace& w);

struct HyperplaneSplit {
    Multivector a;
    Multivector b;
};

/// Decomposes c = a + bar(w) b with a, b in C(w-perp), for a single
/// nonzero w, by the inductive split of every blade factor along
/// V_C = w-perp (+) C bar(w). The auxiliary direction is pinned to
/// bar(w), which always lies outside w-perp here since (w|bar w) > 0;
/// any other vector outside w-perp would serve over a general base
/// field, but the engine does not expose that choice.
HyperplaneSplit hyperplane_decompose(const Multivector& c, const CoordRow& w);

/// Independent route: generic exact linear solve for (a, b) over a basis
/// of C(w-perp); nullopt when no unique solution exists (it always does).
std::optional<HyperplaneSplit> hyperplane_decompose_by_solve(const Multivector& c, const CoordRow& w);

struct IntersectionReport {
    bool equal = false;
    int dim_algebra_side = 0;
    int dim_subspace_side = 0;
    std::optional<std::string> counterexample;
};

/// The fold of algebra intersections of C(Z_i) equals C of the folded
/// subspace intersection, both sides computed independently.
IntersectionReport verify_intersection_theorem(const std::vector<Subspace>& subspaces);

}  // namespace cliff
