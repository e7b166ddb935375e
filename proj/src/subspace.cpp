#include "cliff/subspace.hpp"

#include <stdexcept>

namespace cliff {

Subspace Subspace::span(int ambient_dim, const std::vector<CoordRow>& rows) {
    if (ambient_dim < 0) throw std::invalid_argument("Subspace: negative dimension");
    RrefBuilder b(static_cast<std::size_t>(ambient_dim));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != ambient_dim)
            throw std::invalid_argument("Subspace: ragged input row");
        b.add_row(sparse_from_dense(r));
    }
    Subspace out(ambient_dim);
    for (const auto& r : b.basis()) out.basis_.push_back(dense_from_sparse(r, ambient_dim));
    return out;
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<CoordRow> rows;
    for (int i = 0; i < ambient_dim; ++i) {
        CoordRow r(ambient_dim);
        r[i] = GaussianRational(1);
        rows.push_back(std::move(r));
    }
    return span(ambient_dim, rows);
}

Subspace Subspace::parse(int ambient_dim, const std::vector<std::vector<std::string>>& rows) {
    std::vector<CoordRow> parsed;
    for (const auto& row : rows) {
        CoordRow r;
        for (const auto& lit : row) r.push_back(GaussianRational::parse(lit));
        parsed.push_back(std::move(r));
    }
    return span(ambient_dim, parsed);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
}

Subspace Subspace::orthogonal_complement() const {
    std::vector<SparseRow> rows;
    for (const auto& r : basis_) rows.push_back(sparse_from_dense(r));
    const auto ker = kernel(rows, ambient_dim_);
    std::vector<CoordRow> out;
    for (const auto& k : ker) out.push_back(dense_from_sparse(k, ambient_dim_));
    return span(ambient_dim_, out);
}

bool Subspace::member(const CoordRow& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        throw std::invalid_argument("Subspace: dimension mismatch");
    RrefBuilder b(ambient_dim_);
    for (const auto& r : basis_) b.add_row(sparse_from_dense(r));
    return b.contains(sparse_from_dense(v));
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_dim_ != o.ambient_dim_) throw std::invalid_argument("Subspace: dimension mismatch");
    for (const auto& r : o.basis_)
        if (!member(r)) return false;
    return true;
}

Subspace Subspace::conj() const {
    std::vector<CoordRow> rows;
    for (const auto& r : basis_) {
        CoordRow c;
        for (const auto& v : r) c.push_back(v.conj());
        rows.push_back(std::move(c));
    }
    return span(ambient_dim_, rows);
}

bool Subspace::is_real() const {
    for (const auto& r : basis_)
        for (const auto& v : r)
            if (!v.is_real()) return false;
    return true;
}

std::vector<Multivector> Subspace::basis_vectors() const {
    std::vector<Multivector> out;
    for (const auto& r : basis_) out.push_back(Multivector::vector(r));
    return out;
}

std::vector<std::vector<std::string>> Subspace::to_literal() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : basis_) {
        std::vector<std::string> row;
        for (const auto& v : r) row.push_back(v.str());
        out.push_back(std::move(row));
    }
    return out;
}

std::string Subspace::str() const {
    std::string out = "[";
    for (size_t i = 0; i < basis_.size(); ++i) {
        out += i ? ", (" : "(";
        for (size_t j = 0; j < basis_[i].size(); ++j) {
            if (j) out += ",";
            out += basis_[i][j].str();
        }
        out += ")";
    }
    return out + "]";
}

Subspace intersect(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim())
        throw std::invalid_argument("Subspace: dimension mismatch");
    std::vector<SparseRow> xr, yr;
    for (const auto& r : x.basis()) xr.push_back(sparse_from_dense(r));
    for (const auto& r : y.basis()) yr.push_back(sparse_from_dense(r));
    const auto meet = intersect_rowspaces(xr, yr, x.ambient_dim());
    std::vector<CoordRow> rows;
    for (const auto& r : meet) rows.push_back(dense_from_sparse(r, x.ambient_dim()));
    return Subspace::span(x.ambient_dim(), rows);
}

Subspace sum(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim())
        throw std::invalid_argument("Subspace: dimension mismatch");
    std::vector<CoordRow> rows = x.basis();
    rows.insert(rows.end(), y.basis().begin(), y.basis().end());
    return Subspace::span(x.ambient_dim(), rows);
}

std::vector<CoordRow> orthogonalize(const std::vector<CoordRow>& rows) {
    std::vector<CoordRow> out;
    for (const auto& row : rows) {
        for (const auto& v : row)
            if (!v.is_real()) throw std::invalid_argument("orthogonalize: non-real input");
        CoordRow residual = row;
        for (const auto& prev : out) {
            const GaussianRational f =
                bilinear_form(std::span<const GaussianRational>(prev),
                              std::span<const GaussianRational>(residual)) /
                bilinear_form(std::span<const GaussianRational>(prev),
                              std::span<const GaussianRational>(prev));
            for (size_t i = 0; i < residual.size(); ++i) residual[i] -= f * prev[i];
        }
        bool zero = true;
        for (const auto& v : residual)
            if (!v.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) out.push_back(std::move(residual));
    }
    return out;
}

std::vector<CoordRow> orthogonalize(const Subspace& x) {
    if (!x.is_real()) throw std::invalid_argument("orthogonalize: non-real subspace");
    return orthogonalize(x.basis());
}

Subspace orthogonal_projection_onto(const Subspace& n_space, const Subspace& x_space) {
    if (n_space.ambient_dim() != x_space.ambient_dim())
        throw std::invalid_argument("orthogonal_projection_onto: dimension mismatch");
    if (!n_space.is_real() || !x_space.is_real())
        throw std::invalid_argument("orthogonal_projection_onto: non-real input");
    const auto ortho = orthogonalize(x_space);
    std::vector<CoordRow> projected;
    for (const auto& v : n_space.basis()) {
        CoordRow p(n_space.ambient_dim());
        for (const auto& u : ortho) {
            const GaussianRational f = bilinear_form(std::span<const GaussianRational>(u),
                                                     std::span<const GaussianRational>(v)) /
                                       bilinear_form(std::span<const GaussianRational>(u),
                                                     std::span<const GaussianRational>(u));
            for (size_t i = 0; i < p.size(); ++i) p[i] += f * u[i];
        }
        projected.push_back(std::move(p));
    }
    return Subspace::span(n_space.ambient_dim(), projected);
}

}  // namespace cliff
