#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

/// Sparse row vector over Q(i): (column, coefficient) pairs sorted by
/// column, no zero coefficients.
using SparseRow = std::vector<std::pair<std::uint32_t, GaussianRational>>;

SparseRow sparse_from_dense(const std::vector<GaussianRational>& dense);
std::vector<GaussianRational> dense_from_sparse(const SparseRow& row, std::size_t ncols);

/// r -= f * p, merging by column.
void row_axpy(SparseRow& r, const GaussianRational& f, const SparseRow& p);

/// Incremental reduced row echelon form over Q(i). Rows are inserted one
/// at a time and the basis is kept fully reduced: each stored row has a
/// unit pivot at its leading column and zeros at every other pivot
/// column, so the basis is the canonical RREF of everything inserted.
class RrefBuilder {
public:
    explicit RrefBuilder(std::size_t ncols) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Inserts a row; returns true when the rank grows.
    bool add_row(SparseRow row);

    /// Reduces a copy of `row` against the current basis.
    SparseRow residual(SparseRow row) const;
    /// True when `row` lies in the current row space.
    bool contains(const SparseRow& row) const { return residual(row).empty(); }

    /// RREF basis rows ordered by pivot column.
    std::vector<SparseRow> basis() const;

    /// Canonical basis of the kernel of the inserted rows, viewed as the
    /// coefficient matrix of a homogeneous system in `ncols` unknowns:
    /// one vector per free column f, with entry 1 at f and -R[p][f] at
    /// each pivot column p.
    std::vector<SparseRow> kernel_basis() const;

    const std::vector<std::uint32_t>& pivot_columns() const { return pivots_; }

private:
    void reduce_in_place(SparseRow& row) const;

    std::size_t ncols_;
    std::vector<std::uint32_t> pivots_;  // sorted; pivots_[k] is the pivot of rows_by_pivot_ entry k
    std::map<std::uint32_t, SparseRow> rows_;
};

/// RREF basis of the span of the given rows (canonical).
std::vector<SparseRow> rref(const std::vector<SparseRow>& rows, std::size_t ncols);

/// Canonical kernel basis of the matrix with the given rows.
std::vector<SparseRow> kernel(const std::vector<SparseRow>& rows, std::size_t ncols);

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t ncols);

/// Intersection of two row spaces, canonical RREF. Computed from the
/// kernel of the stacked relation sum a_i x_i - sum b_j y_j = 0.
std::vector<SparseRow> intersect_rowspaces(const std::vector<SparseRow>& x,
                                           const std::vector<SparseRow>& y,
                                           std::size_t ncols);

/// Solves sum_j coeff_j * columns[j] = target exactly. Returns the
/// coefficients when the solution exists and is unique; nullopt when the
/// system is inconsistent or underdetermined.
std::optional<std::vector<GaussianRational>> solve_unique(const std::vector<SparseRow>& columns,
                                                          const SparseRow& target,
                                                          std::size_t nrows);

}  // namespace cliff
