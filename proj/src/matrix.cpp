#include "ghwlrc/matrix.hpp"

#include <stdexcept>
#include <string>

namespace ghwlrc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
    if (!field_) throw std::invalid_argument("matrix needs a field");
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows, std::size_t cols)
{
    if (!rows.empty()) cols = rows.front().size();
    Matrix out(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
    }
    return out;
}

Matrix Matrix::identity(FieldPtr field, std::size_t size)
{
    Matrix out(std::move(field), size, size);
    for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
    return out;
}

Symbol Matrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
}

void Matrix::set(std::size_t r, std::size_t c, unsigned value)
{
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (!field_->contains(value)) {
        throw std::out_of_range("entry " + std::to_string(value) + " is not in " + field_->name());
    }
    (*this)(r, c) = Symbol(value);
}

std::vector<Symbol> Matrix::column(std::size_t c) const
{
    if (c >= cols_) throw std::out_of_range("column index out of range");
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const
{
    Matrix out(field_, rows_, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] >= cols_) throw std::out_of_range("column index " + std::to_string(columns[j]) + " out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, columns[j]);
    }
    return out;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const
{
    if (first + count > rows_) throw std::out_of_range("row block out of range");
    Matrix out(field_, count, cols_);
    std::copy(data_.begin() + std::ptrdiff_t(first * cols_), data_.begin() + std::ptrdiff_t((first + count) * cols_),
              out.data_.begin());
    return out;
}

bool Matrix::is_zero() const
{
    for (Symbol s : data_) {
        if (s != 0) return false;
    }
    return true;
}

bool Matrix::column_is_zero(std::size_t c) const
{
    for (std::size_t r = 0; r < rows_; ++r) {
        if ((*this)(r, c) != 0) return false;
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (!(*a.field_ == *b.field_)) throw std::invalid_argument("matrices over different fields");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not match");
    const Field& f = *a.field_;
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t t = 0; t < a.cols_; ++t) {
            const Symbol x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m)
{
    const Field& f = *m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
        std::size_t pivot = lead_row;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));
        }
        const Symbol scale = f.inv(a(lead_row, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) = f.mul(a(lead_row, j), scale);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row || a(r, c) == 0) continue;
            const Symbol factor = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead_row, j)));
            }
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::size_t rank_of_columns(const Matrix& m, std::span<const std::size_t> columns)
{
    if (columns.empty()) {
        return 0;
    }
    IncrementalBasis basis(*m.field(), m.rows());
    for (std::size_t c : columns) {
        if (c >= m.cols()) throw std::out_of_range("column index " + std::to_string(c) + " out of range");
        basis.insert(m.column(c));
    }
    return basis.rank();
}

Matrix nullspace(const Matrix& m)
{
    const Field& f = *m.field();
    const RrefResult reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : reduced.pivot_columns) is_pivot[c] = true;

    Matrix basis(m.field(), m.cols() - reduced.rank, m.cols());
    std::size_t out_row = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out_row, free) = 1;
        for (std::size_t i = 0; i < reduced.rank; ++i) {
            basis(out_row, reduced.pivot_columns[i]) = f.neg(reduced.reduced(i, free));
        }
        ++out_row;
    }
    return basis;
}

IncrementalBasis::IncrementalBasis(const Field& field, std::size_t dimension)
    : field_(&field), dimension_(dimension), scratch_(dimension)
{
}

void IncrementalBasis::reduce(std::vector<Symbol>& v) const
{
    const Field& f = *field_;
    for (std::size_t t = 0; t < vectors_.size(); ++t) {
        const Symbol factor = v[pivots_[t]];
        if (factor == 0) continue;
        const auto& b = vectors_[t];
        for (std::size_t j = pivots_[t]; j < dimension_; ++j) {
            if (b[j] != 0) v[j] = f.sub(v[j], f.mul(factor, b[j]));
        }
    }
}

bool IncrementalBasis::insert(std::span<const Symbol> v)
{
    std::vector<Symbol> work(v.begin(), v.end());
    reduce(work);
    std::size_t pivot = 0;
    while (pivot < dimension_ && work[pivot] == 0) ++pivot;
    if (pivot == dimension_) return false;
    const Symbol scale = field_->inv(work[pivot]);
    for (std::size_t j = pivot; j < dimension_; ++j) work[j] = field_->mul(work[j], scale);
    vectors_.push_back(std::move(work));
    pivots_.push_back(pivot);
    return true;
}

void IncrementalBasis::pop()
{
    if (vectors_.empty()) throw std::logic_error("pop on an empty basis");
    vectors_.pop_back();
    pivots_.pop_back();
}

bool IncrementalBasis::contains(std::span<const Symbol> v) const
{
    scratch_.assign(v.begin(), v.end());
    reduce(scratch_);
    for (Symbol s : scratch_) {
        if (s != 0) return false;
    }
    return true;
}

} // namespace ghwlrc
