#pragma once

#include <string>
#include <vector>

#include "cliff/linalg.hpp"
#include "cliff/multivector.hpp"
#include "cliff/rational.hpp"

namespace cliff {

using CoordRow = std::vector<GaussianRational>;

/// A complex subspace of V_C in the orthonormal coordinates of V,
/// stored as a reduced row echelon basis. Equal subspaces have
/// identical representations.
class Subspace {
public:
    /// Span of the given coordinate rows, each of length n.
    static Subspace span(int ambient_dim, const std::vector<CoordRow>& rows);
    static Subspace zero(int ambient_dim) { return span(ambient_dim, {}); }
    static Subspace full(int ambient_dim);
    /// Parses rows of scalar literals.
    static Subspace parse(int ambient_dim, const std::vector<std::vector<std::string>>& rows);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<CoordRow>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Bilinear-orthogonal space: kernel of the basis matrix under the
    /// plain (unconjugated) dot product. dim W + dim W-perp = n.
    Subspace orthogonal_complement() const;

    bool member(const CoordRow& v) const;
    bool contains(const Subspace& o) const;
    /// Coordinatewise conjugate.
    Subspace conj() const;
    bool is_real() const;

    /// Basis rows as degree-1 multivectors.
    std::vector<Multivector> basis_vectors() const;

    std::vector<std::vector<std::string>> to_literal() const;
    std::string str() const;

private:
    explicit Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {}

    int ambient_dim_;
    std::vector<CoordRow> basis_;  // RREF rows
};

Subspace intersect(const Subspace& x, const Subspace& y);
Subspace sum(const Subspace& x, const Subspace& y);

/// Gram-Schmidt without normalization: pairwise bilinear-orthogonal
/// rational vectors spanning the same space as the input rows, dependent
/// rows dropped. Requires all-real rows; self-pairings are positive.
std::vector<CoordRow> orthogonalize(const std::vector<CoordRow>& rows);
/// Same, applied to the subspace's canonical basis.
std::vector<CoordRow> orthogonalize(const Subspace& x);

/// Span of the (.|.)-orthogonal projections of N's basis vectors onto X.
/// Both subspaces must be real.
Subspace orthogonal_projection_onto(const Subspace& n_space, const Subspace& x_space);

}  // namespace cliff
