#include "cliff/super_tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliff {

CoordinateSplit CoordinateSplit::of(int ambient_dim, BladeMask x_mask) {
    const BladeMask all = (ambient_dim == 0) ? 0 : ((BladeMask(1) << ambient_dim) - 1);
    if (x_mask & ~all) throw std::invalid_argument("CoordinateSplit: mask exceeds dimension");
    return {ambient_dim, x_mask, static_cast<BladeMask>(all & ~x_mask)};
}

namespace {

/// Mask of the coordinate axes spanning s, provided s is a span of
/// basis vectors; nullopt otherwise.
std::optional<BladeMask> coordinate_mask(const Subspace& s) {
    BladeMask mask = 0;
    for (const auto& row : s.basis()) {
        int nonzero = -1;
        for (int i = 0; i < s.ambient_dim(); ++i) {
            if (row[i].is_zero()) continue;
            if (nonzero >= 0) return std::nullopt;
            nonzero = i;
        }
        if (nonzero < 0 || row[nonzero] != GaussianRational(1)) return std::nullopt;
        mask |= BladeMask(1) << nonzero;
    }
    return mask;
}

}  // namespace

CoordinateSplit CoordinateSplit::from_subspaces(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim())
        throw std::invalid_argument("CoordinateSplit: ambient dimension mismatch");
    if (intersect(x, y).dim() != 0) throw std::invalid_argument("CoordinateSplit: X and Y intersect");
    if (sum(x, y).dim() != x.ambient_dim())
        throw std::invalid_argument("CoordinateSplit: X + Y is not the full space");
    for (const auto& xv : x.basis())
        for (const auto& yv : y.basis())
            if (!bilinear_form(std::span<const GaussianRational>(xv),
                               std::span<const GaussianRational>(yv))
                     .is_zero())
                throw std::invalid_argument("CoordinateSplit: X and Y are not orthogonal");
    const auto xm = coordinate_mask(x);
    const auto ym = coordinate_mask(y);
    if (!xm || !ym) throw std::invalid_argument("CoordinateSplit: not spans of disjoint basis subsets");
    return of(x.ambient_dim(), *xm);
}

int CoordinateSplit::left_pos(int ambient_index) const {
    return blade_degree(x_mask & ((BladeMask(1) << ambient_index) - 1));
}

int CoordinateSplit::right_pos(int ambient_index) const {
    return blade_degree(y_mask & ((BladeMask(1) << ambient_index) - 1));
}

BladeMask CoordinateSplit::ambient_of_left(BladeMask local) const {
    BladeMask out = 0;
    BladeMask axes = x_mask;
    for (int pos = 0; axes != 0; ++pos, axes &= axes - 1)
        if (local & (BladeMask(1) << pos)) out |= BladeMask(1) << __builtin_ctz(axes);
    return out;
}

BladeMask CoordinateSplit::ambient_of_right(BladeMask local) const {
    BladeMask out = 0;
    BladeMask axes = y_mask;
    for (int pos = 0; axes != 0; ++pos, axes &= axes - 1)
        if (local & (BladeMask(1) << pos)) out |= BladeMask(1) << __builtin_ctz(axes);
    return out;
}

SuperTensorElement::SuperTensorElement(int left_dim, int right_dim)
    : left_dim_(left_dim), right_dim_(right_dim) {
    if (left_dim < 0 || right_dim < 0)
        throw std::invalid_argument("SuperTensorElement: negative factor dimension");
}

SuperTensorElement SuperTensorElement::unit(int left_dim, int right_dim) {
    return tensor_blade(left_dim, right_dim, 0, 0);
}

SuperTensorElement SuperTensorElement::tensor_blade(int left_dim, int right_dim, BladeMask bx,
                                                    BladeMask by, GaussianRational coeff) {
    SuperTensorElement t(left_dim, right_dim);
    if ((bx >> left_dim) || (by >> right_dim))
        throw std::invalid_argument("SuperTensorElement: blade mask exceeds factor dimension");
    if (!coeff.is_zero()) t.terms_.emplace(Key{bx, by}, std::move(coeff));
    return t;
}

GaussianRational SuperTensorElement::coeff(BladeMask bx, BladeMask by) const {
    const auto it = terms_.find(Key{bx, by});
    return it == terms_.end() ? GaussianRational() : it->second;
}

void SuperTensorElement::add_term(const Key& key, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    const auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {
void check_same_shape(const SuperTensorElement& a, const SuperTensorElement& b) {
    if (a.left_dim() != b.left_dim() || a.right_dim() != b.right_dim())
        throw std::invalid_argument("SuperTensorElement: factor dimension mismatch");
}
}  // namespace

SuperTensorElement SuperTensorElement::operator+(const SuperTensorElement& o) const {
    check_same_shape(*this, o);
    SuperTensorElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

SuperTensorElement SuperTensorElement::operator-(const SuperTensorElement& o) const {
    check_same_shape(*this, o);
    SuperTensorElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

SuperTensorElement SuperTensorElement::operator*(const SuperTensorElement& o) const {
    check_same_shape(*this, o);
    SuperTensorElement out(left_dim_, right_dim_);
    for (const auto& [k1, c1] : terms_) {
        const int right_deg = blade_degree(k1.second);
        for (const auto& [k2, c2] : o.terms_) {
            const auto px = blade_product(k1.first, k2.first);
            const auto py = blade_product(k1.second, k2.second);
            int sign = px.sign * py.sign;
            if ((right_deg & 1) && (blade_degree(k2.first) & 1)) sign = -sign;
            GaussianRational c = c1 * c2;
            if (sign < 0) c = -c;
            out.add_term(Key{px.mask, py.mask}, c);
        }
    }
    return out;
}

SuperTensorElement SuperTensorElement::operator*(const GaussianRational& s) const {
    SuperTensorElement out(left_dim_, right_dim_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
}

SuperTensorElement SuperTensorElement::gamma() const {
    SuperTensorElement out(left_dim_, right_dim_);
    for (const auto& [k, c] : terms_) {
        const int deg = blade_degree(k.first) + blade_degree(k.second);
        out.terms_.emplace(k, (deg & 1) ? -c : c);
    }
    return out;
}

bool SuperTensorElement::operator==(const SuperTensorElement& o) const {
    return left_dim_ == o.left_dim_ && right_dim_ == o.right_dim_ && terms_ == o.terms_;
}

std::string SuperTensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + blade_name(k.first) + "(x)" + blade_name(k.second);
    }
    return out;
}

SuperTensorElement phi(const CoordinateSplit& split, const Multivector& a) {
    if (a.dim() != split.ambient_dim) throw std::invalid_argument("phi: dimension mismatch");
    const int kx = split.left_dim();
    const int ky = split.right_dim();
    SuperTensorElement out(kx, ky);
    for (const auto& [mask, coeff] : a.terms()) {
        // Multiply out phi of the blade's factors in increasing index
        // order; each factor is x (x) 1 or 1 (x) y.
        SuperTensorElement acc = SuperTensorElement::unit(kx, ky);
        for (BladeMask rest = mask; rest != 0; rest &= rest - 1) {
            const int i = __builtin_ctz(rest);
            const BladeMask bit = BladeMask(1) << i;
            SuperTensorElement factor =
                (split.x_mask & bit)
                    ? SuperTensorElement::tensor_blade(kx, ky, BladeMask(1) << split.left_pos(i), 0)
                    : SuperTensorElement::tensor_blade(kx, ky, 0, BladeMask(1) << split.right_pos(i));
            acc = acc * factor;
        }
        out = out + acc * coeff;
    }
    return out;
}

Multivector phi_inverse(const CoordinateSplit& split, const SuperTensorElement& t) {
    if (t.left_dim() != split.left_dim() || t.right_dim() != split.right_dim())
        throw std::invalid_argument("phi_inverse: factor dimension mismatch");
    Multivector out = Multivector::zero(split.ambient_dim);
    for (const auto& [key, coeff] : t.terms()) {
        const BladeMask ambient = split.ambient_of_left(key.first) | split.ambient_of_right(key.second);
        // Phi maps the ambient blade to exactly this tensor blade with a
        // sign; divide the sign back out.
        const SuperTensorElement image = phi(split, Multivector::blade(split.ambient_dim, ambient));
        const GaussianRational sign = image.coeff(key.first, key.second);
        out = out + Multivector::blade(split.ambient_dim, ambient, coeff / sign);
    }
    return out;
}

PhiIsomorphismReport verify_phi_isomorphism(
    const CoordinateSplit& split, const std::vector<Multivector>& sample_vectors,
    const std::vector<std::pair<Multivector, Multivector>>& sample_pairs) {
    PhiIsomorphismReport report;
    const int n = split.ambient_dim;
    const int kx = split.left_dim();
    const int ky = split.right_dim();
    const SuperTensorElement one = SuperTensorElement::unit(kx, ky);

    report.clifford_relation_ok = true;
    for (const auto& v : sample_vectors) {
        const SuperTensorElement image = phi(split, v);
        if (image * image != one * bilinear_form(v, v)) {
            report.clifford_relation_ok = false;
            report.counterexample = v.str();
            break;
        }
    }

    report.homomorphism_ok = true;
    for (const auto& [a, b] : sample_pairs) {
        if (phi(split, a * b) != phi(split, a) * phi(split, b)) {
            report.homomorphism_ok = false;
            if (!report.counterexample) report.counterexample = (a * b).str();
            break;
        }
    }

    // Bijectivity by exact rank over the blade basis, with pair columns
    // indexed as (bx << ky) | by.
    RrefBuilder b(std::size_t(1) << n);
    for (BladeMask mask = 0; mask < (BladeMask(1) << n); ++mask) {
        SparseRow row;
        const SuperTensorElement image = phi(split, Multivector::blade(n, mask));
        for (const auto& [key, c] : image.terms())
            row.emplace_back((key.first << ky) | key.second, c);
        std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        b.add_row(std::move(row));
    }
    report.rank = static_cast<int>(b.rank());
    report.rank_ok = (report.rank == (1 << n));

    report.grading_ok = true;
    for (const auto& [a, bb] : sample_pairs) {
        if (phi(split, a.gamma()) != phi(split, a).gamma()) {
            report.grading_ok = false;
            if (!report.counterexample) report.counterexample = a.str();
            break;
        }
    }
    return report;
}

TensorDualityReport verify_tensor_duality(const CoordinateSplit& split) {
    TensorDualityReport report;
    const int n = split.ambient_dim;
    const int kx = split.left_dim();
    const int ky = split.right_dim();
    const std::size_t pairs = std::size_t(1) << n;
    const auto col_of = [ky](BladeMask bx, BladeMask by) -> std::uint32_t {
        return (bx << ky) | by;
    };

    // Supercommutant of C(X) (x) C 1 inside the tensor algebra: for each
    // X generator g, (g (x) 1) c = gamma(c) (g (x) 1) as a linear system
    // over the pair coefficients.
    RrefBuilder solver(pairs);
    std::map<std::uint32_t, SparseRow> rows;
    for (int p = 0; p < kx; ++p) {
        rows.clear();
        const SuperTensorElement gen =
            SuperTensorElement::tensor_blade(kx, ky, BladeMask(1) << p, 0);
        for (BladeMask bx = 0; bx < (BladeMask(1) << kx); ++bx) {
            for (BladeMask by = 0; by < (BladeMask(1) << ky); ++by) {
                const SuperTensorElement c = SuperTensorElement::tensor_blade(kx, ky, bx, by);
                const SuperTensorElement diff = gen * c - c.gamma() * gen;
                for (const auto& [key, v] : diff.terms())
                    rows[col_of(key.first, key.second)].emplace_back(col_of(bx, by), v);
            }
        }
        for (auto& [r, row] : rows) {
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            solver.add_row(std::move(row));
        }
    }
    const auto kernel_rows = solver.kernel_basis();

    RrefBuilder computed(pairs);
    for (const auto& r : kernel_rows) computed.add_row(r);
    RrefBuilder expected(pairs);
    for (BladeMask by = 0; by < (BladeMask(1) << ky); ++by)
        expected.add_row({{col_of(0, by), GaussianRational(1)}});

    report.dim = static_cast<int>(computed.rank());
    report.equal = (computed.basis() == expected.basis());
    if (!report.equal) {
        for (const auto& r : computed.basis())
            if (!expected.contains(r)) {
                SuperTensorElement witness(kx, ky);
                for (const auto& [c, v] : r)
                    witness = witness + SuperTensorElement::tensor_blade(kx, ky, c >> ky,
                                                                         c & ((BladeMask(1) << ky) - 1), v);
                report.counterexample = witness.str();
                break;
            }
    }

    // Transport through Phi-inverse and compare with the direct
    // supercommutant of X in C(V_C).
    std::vector<Multivector> transported;
    for (const auto& r : kernel_rows) {
        SuperTensorElement t(kx, ky);
        for (const auto& [c, v] : r)
            t = t + SuperTensorElement::tensor_blade(kx, ky, c >> ky, c & ((BladeMask(1) << ky) - 1), v);
        transported.push_back(phi_inverse(split, t));
    }
    std::vector<CoordRow> x_rows;
    for (int i = 0; i < n; ++i)
        if (split.x_mask & (BladeMask(1) << i)) {
            CoordRow row(n);
            row[i] = GaussianRational(1);
            x_rows.push_back(std::move(row));
        }
    const Subspace x_space = Subspace::span(n, x_rows);
    report.transport_ok =
        (AlgebraSubspace::span(n, transported) == supercommutant(x_space));
    return report;
}

}  // namespace cliff
