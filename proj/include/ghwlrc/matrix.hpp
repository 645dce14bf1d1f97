#pragma once

#include "ghwlrc/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ghwlrc {

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    /// Throws std::out_of_range if an entry is not a field symbol and
    /// std::invalid_argument on ragged rows.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows, std::size_t cols = 0);
    static Matrix identity(FieldPtr field, std::size_t size);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Symbol at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, unsigned value);

    std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<Symbol> column(std::size_t c) const;

    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> columns) const;
    /// Rows [first, first + count).
    Matrix row_block(std::size_t first, std::size_t count) const;
    bool is_zero() const;
    bool column_is_zero(std::size_t c) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Symbol> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rank of the submatrix formed by `columns`; an empty set has rank 0.
std::size_t rank_of_columns(const Matrix& m, std::span<const std::size_t> columns);

/// Basis of {v : m * v^T = 0}, one vector per row.
Matrix nullspace(const Matrix& m);

/**
 * Echelon basis grown one vector at a time, with LIFO removal.
 *
 * Each stored vector is reduced against all earlier ones and normalized so its
 * pivot entry is 1, which keeps insert/contains at O(rank * dim) and makes
 * `pop` exact. Used by the subset sweeps, which visit subsets depth-first.
 */
class IncrementalBasis {
public:
    IncrementalBasis(const Field& field, std::size_t dimension);

    /// Returns true iff `v` was independent of the current basis (and was added).
    bool insert(std::span<const Symbol> v);
    /// Removes the most recent insertion that returned true.
    void pop();
    bool contains(std::span<const Symbol> v) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t dimension() const { return dimension_; }

private:
    void reduce(std::vector<Symbol>& v) const;

    const Field* field_;
    std::size_t dimension_;
    std::vector<std::vector<Symbol>> vectors_;
    std::vector<std::size_t> pivots_;
    mutable std::vector<Symbol> scratch_;
};

} // namespace ghwlrc
