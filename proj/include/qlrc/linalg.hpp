#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlrc/field.hpp"

namespace qlrc {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix from_rows(const Field& field, const std::vector<std::vector<Element>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    /// Rows of *this followed by rows of below.
    Matrix stacked(const Matrix& below) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

Element dot(std::span<const Element> a, std::span<const Element> b);
std::size_t rank(const Matrix& m);
/// Coefficients c with sum_i c_i * row_i == target, if any exist.
std::optional<std::vector<Element>> solve_row_combination(const Matrix& rows, std::span<const Element> target);

}  // namespace qlrc
