#include "cliff/duality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cliff {

SparseRow multivector_to_row(const Multivector& a) {
    SparseRow row;
    row.reserve(a.terms().size());
    for (const auto& [m, c] : a.terms()) row.emplace_back(m, c);
    return row;
}

Multivector multivector_from_row(const SparseRow& row, int dim) {
    Multivector out(dim);
    for (const auto& [m, c] : row) out = out + Multivector::blade(dim, m, c);
    return out;
}

AlgebraSubspace AlgebraSubspace::span(int ambient_dim, const std::vector<Multivector>& elements) {
    RrefBuilder b(std::size_t(1) << ambient_dim);
    for (const auto& e : elements) {
        if (e.dim() != ambient_dim)
            throw std::invalid_argument("AlgebraSubspace: dimension mismatch");
        b.add_row(multivector_to_row(e));
    }
    AlgebraSubspace out(ambient_dim);
    for (const auto& r : b.basis()) out.basis_.push_back(multivector_from_row(r, ambient_dim));
    return out;
}

AlgebraSubspace AlgebraSubspace::scalars(int ambient_dim) {
    return span(ambient_dim, {Multivector::unit(ambient_dim)});
}

bool AlgebraSubspace::contains(const Multivector& a) const {
    if (a.dim() != ambient_dim_) throw std::invalid_argument("AlgebraSubspace: dimension mismatch");
    RrefBuilder b(std::size_t(1) << ambient_dim_);
    for (const auto& e : basis_) b.add_row(multivector_to_row(e));
    return b.contains(multivector_to_row(a));
}

bool AlgebraSubspace::operator==(const AlgebraSubspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
}

AlgebraSubspace intersect_algebra(const AlgebraSubspace& a, const AlgebraSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect_algebra: dimension mismatch");
    std::vector<SparseRow> ra, rb;
    for (const auto& e : a.basis()) ra.push_back(multivector_to_row(e));
    for (const auto& e : b.basis()) rb.push_back(multivector_to_row(e));
    const auto meet = intersect_rowspaces(ra, rb, std::size_t(1) << a.ambient_dim());
    std::vector<Multivector> elements;
    for (const auto& r : meet) elements.push_back(multivector_from_row(r, a.ambient_dim()));
    return AlgebraSubspace::span(a.ambient_dim(), elements);
}

AlgebraSubspace subalgebra_span(const Subspace& z) {
    // Ordered products over strictly increasing multi-indices of the
    // canonical basis.
    return subalgebra_span_from_generators(z.ambient_dim(), z.basis());
}

namespace {

/// Equation rows of the constraint w a = gamma(a) w for one vector w,
/// over the 2^n unknown blade coefficients of a. Row keys are output
/// blade masks; the caller offsets them per generator block.
std::vector<SparseRow> supercommutant_block(const Multivector& w, int n) {
    std::map<BladeMask, SparseRow> rows;
    const std::size_t algebra_dim = std::size_t(1) << n;
    for (BladeMask m = 0; m < algebra_dim; ++m) {
        const bool odd = (blade_degree(m) & 1) != 0;
        for (const auto& [wm, wc] : w.terms()) {
            // w e_m - (-1)^{deg m} e_m w, coefficient of unknown a_m.
            const auto left = blade_product(wm, m);
            const auto right = blade_product(m, wm);
            GaussianRational lc = left.sign < 0 ? -wc : wc;
            GaussianRational rc = right.sign < 0 ? -wc : wc;
            if (odd) rc = -rc;
            // left.mask == right.mask == m XOR wm for degree-1 w terms.
            const GaussianRational coeff = lc - rc;
            if (!coeff.is_zero()) rows[left.mask].emplace_back(m, coeff);
        }
    }
    std::vector<SparseRow> out;
    out.reserve(rows.size());
    for (auto& [r, row] : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

AlgebraSubspace supercommutant(const Subspace& w) {
    const int n = w.ambient_dim();
    const std::size_t algebra_dim = std::size_t(1) << n;
    RrefBuilder b(algebra_dim);
    for (const auto& gen : w.basis_vectors())
        for (auto& row : supercommutant_block(gen, n)) b.add_row(std::move(row));
    std::vector<Multivector> elements;
    for (const auto& k : b.kernel_basis()) elements.push_back(multivector_from_row(k, n));
    return AlgebraSubspace::span(n, elements);
}

AlgebraSubspace supercommutant_by_intersection(const Subspace& w) {
    const int n = w.ambient_dim();
    AlgebraSubspace out = subalgebra_span(Subspace::full(n));
    for (const auto& row : w.basis()) {
        const Subspace line = Subspace::span(n, {row});
        out = intersect_algebra(out, subalgebra_span(line.orthogonal_complement()));
    }
    return out;
}

AlgebraSubspace supercommutant_from_generators(int n, const std::vector<CoordRow>& generators) {
    RrefBuilder b(std::size_t(1) << n);
    for (const auto& gen : generators)
        for (auto& row : supercommutant_block(Multivector::vector(gen), n)) b.add_row(std::move(row));
    std::vector<Multivector> elements;
    for (const auto& k : b.kernel_basis()) elements.push_back(multivector_from_row(k, n));
    return AlgebraSubspace::span(n, elements);
}

AlgebraSubspace subalgebra_span_from_generators(int n, const std::vector<CoordRow>& generators) {
    // Drop dependent generators, keep the given order.
    RrefBuilder indep(static_cast<std::size_t>(n));
    std::vector<Multivector> gens;
    for (const auto& g : generators)
        if (indep.add_row(sparse_from_dense(g))) gens.push_back(Multivector::vector(g));

    std::vector<Multivector> products{Multivector::unit(n)};
    for (const auto& gen : gens) {
        const std::size_t count = products.size();
        for (std::size_t i = 0; i < count; ++i) products.push_back(products[i] * gen);
    }
    AlgebraSubspace out = AlgebraSubspace::span(n, products);
    if (out.dim() != (1 << static_cast<int>(gens.size())))
        throw std::logic_error("subalgebra_span: multi-index products are dependent");
    return out;
}

AlgebraSubspace supercentre(int n) { return supercommutant(Subspace::full(n)); }

DualityComputation compute_twisted_duality(const Subspace& w) {
    Subspace perp = w.orthogonal_complement();
    AlgebraSubspace commutant = supercommutant(w);
    AlgebraSubspace expected = subalgebra_span(perp);
    return {std::move(perp), std::move(commutant), std::move(expected)};
}

DualityReport DualityComputation::report(const Subspace& w) const {
    DualityReport out;
    out.dim_supercommutant = commutant.dim();
    out.dim_subalgebra = expected.dim();
    out.complement_equals_w = (complement == w);
    out.equal = (commutant == expected);
    if (!out.equal) {
        for (const auto& e : commutant.basis())
            if (!expected.contains(e)) {
                out.counterexample = e.str();
                break;
            }
        if (!out.counterexample)
            for (const auto& e : expected.basis())
                if (!commutant.contains(e)) {
                    out.counterexample = e.str();
                    break;
                }
    }
    return out;
}

DualityReport verify_twisted_duality(const Subspace& w) {
    return compute_twisted_duality(w).report(w);
}

HyperplaneSplit hyperplane_decompose(const Multivector& c, const CoordRow& w) {
    const int n = c.dim();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("hyperplane_decompose: dimension mismatch");
    bool nonzero = false;
    for (const auto& v : w)
        if (!v.is_zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("hyperplane_decompose: zero vector");

    CoordRow wbar(w.size());
    for (size_t i = 0; i < w.size(); ++i) wbar[i] = w[i].conj();
    const Multivector wbar_mv = Multivector::vector(wbar);
    // <w|w> = (bar w | w) > 0, and bar(w) bar(w) = conj((w|w)) 1.
    const GaussianRational herm_ww =
        hermitian_form(std::span<const GaussianRational>(w), std::span<const GaussianRational>(w));
    const GaussianRational bilin_ww_conj =
        bilinear_form(std::span<const GaussianRational>(w), std::span<const GaussianRational>(w)).conj();

    // Split of each generator: e_i = u_i + lambda_i bar(w) with u_i in
    // w-perp and lambda_i = (w|e_i)/<w|w>.
    std::vector<GaussianRational> lambda(n);
    std::vector<Multivector> u;
    std::vector<GaussianRational> herm_w_u(n);  // <w|u_i>
    for (int i = 0; i < n; ++i) {
        lambda[i] = w[i] / herm_ww;
        u.push_back(Multivector::blade(n, BladeMask(1) << i) - wbar_mv * lambda[i]);
        herm_w_u[i] = w[i].conj() - lambda[i] * bilin_ww_conj;
    }

    // Inductive split of each blade over its leading factor, memoized
    // per mask.
    std::map<BladeMask, HyperplaneSplit> cache;
    cache.emplace(0, HyperplaneSplit{Multivector::unit(n), Multivector::zero(n)});
    auto decompose_blade = [&](auto&& self, BladeMask mask) -> const HyperplaneSplit& {
        const auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        const int i = __builtin_ctz(mask);  // leading factor v_0 = e_{i+1}
        const HyperplaneSplit& tail = self(self, mask & (mask - 1));
        const GaussianRational mu = lambda[i] * bilin_ww_conj + GaussianRational(2) * herm_w_u[i];
        HyperplaneSplit split{u[i] * tail.a + tail.b * mu, tail.a * lambda[i] - u[i] * tail.b};
        return cache.emplace(mask, std::move(split)).first->second;
    };

    HyperplaneSplit out{Multivector::zero(n), Multivector::zero(n)};
    for (const auto& [mask, coeff] : c.terms()) {
        const HyperplaneSplit& part = decompose_blade(decompose_blade, mask);
        out.a = out.a + part.a * coeff;
        out.b = out.b + part.b * coeff;
    }
    return out;
}

std::optional<HyperplaneSplit> hyperplane_decompose_by_solve(const Multivector& c, const CoordRow& w) {
    const int n = c.dim();
    const Subspace perp = Subspace::span(n, {w}).orthogonal_complement();
    const auto basis = subalgebra_span(perp).basis();
    CoordRow wbar(w.size());
    for (size_t i = 0; i < w.size(); ++i) wbar[i] = w[i].conj();
    const Multivector wbar_mv = Multivector::vector(wbar);

    std::vector<SparseRow> columns;
    for (const auto& m : basis) columns.push_back(multivector_to_row(m));
    for (const auto& m : basis) columns.push_back(multivector_to_row(wbar_mv * m));
    const auto solution = solve_unique(columns, multivector_to_row(c), std::size_t(1) << n);
    if (!solution) return std::nullopt;

    HyperplaneSplit out{Multivector::zero(n), Multivector::zero(n)};
    const std::size_t half = basis.size();
    for (std::size_t k = 0; k < half; ++k) {
        out.a = out.a + basis[k] * (*solution)[k];
        out.b = out.b + basis[k] * (*solution)[half + k];
    }
    return out;
}

IntersectionReport verify_intersection_theorem(const std::vector<Subspace>& subspaces) {
    if (subspaces.empty())
        throw std::invalid_argument("verify_intersection_theorem: empty family");
    const int n = subspaces.front().ambient_dim();
    for (const auto& s : subspaces)
        if (s.ambient_dim() != n)
            throw std::invalid_argument("verify_intersection_theorem: dimension mismatch");

    AlgebraSubspace algebra_side = subalgebra_span(subspaces.front());
    Subspace subspace_meet = subspaces.front();
    for (std::size_t i = 1; i < subspaces.size(); ++i) {
        algebra_side = intersect_algebra(algebra_side, subalgebra_span(subspaces[i]));
        subspace_meet = intersect(subspace_meet, subspaces[i]);
    }
    const AlgebraSubspace subspace_side = subalgebra_span(subspace_meet);

    IntersectionReport report;
    report.dim_algebra_side = algebra_side.dim();
    report.dim_subspace_side = subspace_side.dim();
    report.equal = (algebra_side == subspace_side);
    if (!report.equal) {
        for (const auto& e : algebra_side.basis())
            if (!subspace_side.contains(e)) {
                report.counterexample = e.str();
                break;
            }
        if (!report.counterexample)
            for (const auto& e : subspace_side.basis())
                if (!algebra_side.contains(e)) {
                    report.counterexample = e.str();
                    break;
                }
    }
    return report;
}

}  // namespace cliff
