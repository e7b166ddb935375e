#include "cliff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliff {

SparseRow sparse_from_dense(const std::vector<GaussianRational>& dense) {
    SparseRow row;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) row.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
    return row;
}

std::vector<GaussianRational> dense_from_sparse(const SparseRow& row, std::size_t ncols) {
    std::vector<GaussianRational> dense(ncols);
    for (const auto& [c, v] : row) dense.at(c) = v;
    return dense;
}

void row_axpy(SparseRow& r, const GaussianRational& f, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    auto ir = r.begin();
    auto ip = p.begin();
    while (ir != r.end() || ip != p.end()) {
        if (ip == p.end() || (ir != r.end() && ir->first < ip->first)) {
            out.push_back(*ir++);
        } else if (ir == r.end() || ip->first < ir->first) {
            out.emplace_back(ip->first, -(f * ip->second));
            ++ip;
        } else {
            GaussianRational v = ir->second - f * ip->second;
            if (!v.is_zero()) out.emplace_back(ir->first, std::move(v));
            ++ir;
            ++ip;
        }
    }
    r = std::move(out);
}

void RrefBuilder::reduce_in_place(SparseRow& row) const {
    std::size_t i = 0;
    while (i < row.size()) {
        const auto it = rows_.find(row[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        // Pivot rows have unit pivots, so the entry at this column
        // cancels exactly and only later columns are touched.
        const GaussianRational f = row[i].second;
        row_axpy(row, f, it->second);
    }
}

bool RrefBuilder::add_row(SparseRow row) {
    for (const auto& [c, v] : row)
        if (c >= ncols_) throw std::invalid_argument("RrefBuilder: column out of range");
    reduce_in_place(row);
    if (row.empty()) return false;

    const GaussianRational lead_inv = row.front().second.inv();
    for (auto& [c, v] : row) v = v * lead_inv;
    const std::uint32_t pivot = row.front().first;

    // Back-eliminate the new pivot column from earlier rows. Rows with a
    // larger pivot cannot contain this column.
    for (auto& [p, r] : rows_) {
        if (p >= pivot) break;
        const auto it = std::lower_bound(r.begin(), r.end(), pivot,
                                         [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it != r.end() && it->first == pivot) {
            const GaussianRational f = it->second;
            row_axpy(r, f, row);
        }
    }

    pivots_.insert(std::lower_bound(pivots_.begin(), pivots_.end(), pivot), pivot);
    rows_.emplace(pivot, std::move(row));
    return true;
}

SparseRow RrefBuilder::residual(SparseRow row) const {
    reduce_in_place(row);
    return row;
}

std::vector<SparseRow> RrefBuilder::basis() const {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
}

std::vector<SparseRow> RrefBuilder::kernel_basis() const {
    std::vector<SparseRow> out;
    std::size_t pi = 0;
    for (std::uint32_t f = 0; f < ncols_; ++f) {
        if (pi < pivots_.size() && pivots_[pi] == f) {
            ++pi;
            continue;
        }
        SparseRow k;
        for (const auto& [p, r] : rows_) {
            const auto it = std::lower_bound(r.begin(), r.end(), f,
                                             [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it != r.end() && it->first == f) k.emplace_back(p, -(it->second));
        }
        k.emplace_back(f, GaussianRational(1));
        std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<SparseRow> rref(const std::vector<SparseRow>& rows, std::size_t ncols) {
    RrefBuilder b(ncols);
    for (const auto& r : rows) b.add_row(r);
    return b.basis();
}

std::vector<SparseRow> kernel(const std::vector<SparseRow>& rows, std::size_t ncols) {
    RrefBuilder b(ncols);
    for (const auto& r : rows) b.add_row(r);
    return b.kernel_basis();
}

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t ncols) {
    RrefBuilder b(ncols);
    for (const auto& r : rows) b.add_row(r);
    return b.rank();
}

std::vector<SparseRow> intersect_rowspaces(const std::vector<SparseRow>& x,
                                           const std::vector<SparseRow>& y,
                                           std::size_t ncols) {
    const std::size_t dx = x.size();
    const std::size_t dy = y.size();
    // Relation system: one equation per coordinate, unknowns are the
    // combination coefficients (a_0..a_{dx-1}, b_0..b_{dy-1}).
    std::vector<SparseRow> eqs(ncols);
    for (std::size_t i = 0; i < dx; ++i)
        for (const auto& [c, v] : x[i]) eqs.at(c).emplace_back(static_cast<std::uint32_t>(i), v);
    for (std::size_t j = 0; j < dy; ++j)
        for (const auto& [c, v] : y[j]) eqs.at(c).emplace_back(static_cast<std::uint32_t>(dx + j), -v);
    for (auto& e : eqs)
        std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    RrefBuilder b(dx + dy);
    for (auto& e : eqs)
        if (!e.empty()) b.add_row(std::move(e));

    RrefBuilder out(ncols);
    for (const auto& k : b.kernel_basis()) {
        SparseRow v;
        for (const auto& [idx, coeff] : k) {
            if (idx >= dx) break;
            SparseRow scaled = x[idx];
            for (auto& [c, val] : scaled) val = val * coeff;
            row_axpy(v, GaussianRational(-1), scaled);  // v += scaled
        }
        out.add_row(std::move(v));
    }
    return out.basis();
}

std::optional<std::vector<GaussianRational>> solve_unique(const std::vector<SparseRow>& columns,
                                                          const SparseRow& target,
                                                          std::size_t nrows) {
    const std::size_t k = columns.size();
    std::vector<SparseRow> eqs(nrows);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [r, v] : columns[j]) eqs.at(r).emplace_back(static_cast<std::uint32_t>(j), v);
    for (const auto& [r, v] : target) eqs.at(r).emplace_back(static_cast<std::uint32_t>(k), v);
    for (auto& e : eqs)
        std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    RrefBuilder b(k + 1);
    for (auto& e : eqs)
        if (!e.empty()) b.add_row(std::move(e));

    const auto& pivots = b.pivot_columns();
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
    if (b.rank() != k) return std::nullopt;                          // underdetermined

    std::vector<GaussianRational> solution(k);
    for (const auto& row : b.basis()) {
        const std::uint32_t j = row.front().first;
        if (row.size() == 2 && row.back().first == k)
            solution[j] = row.back().second;
        else if (row.size() != 1)
            return std::nullopt;
    }
    return solution;
}

}  // namespace cliff
