#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fingeo/galois.hpp"

namespace fingeo {

/// Dense row-major matrix of field elements. The field is passed to every
/// operation rather than stored.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Elem> r);
    void truncate_rows(std::size_t rows);

    const std::vector<Elem>& data() const noexcept { return data_; }
    std::vector<std::vector<Elem>> to_rows() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// In-place reduced row echelon form; zero rows are dropped. Returns the
/// pivot column of each remaining row.
std::vector<std::size_t> row_reduce(const Field& F, Matrix& m);

std::size_t rank(const Field& F, Matrix m);

/// Basis (as rows) of {y : m y^T = 0}.
Matrix null_space(const Field& F, const Matrix& m);

Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b);

/// Normalizes v in place so that its first nonzero entry is 1; returns false
/// for the zero vector.
bool normalize(const Field& F, std::span<Elem> v);

} // namespace fingeo
