#include "qlrc/linalg.hpp"

namespace qlrc {

namespace {

using Raw = std::vector<std::vector<std::uint32_t>>;

// In-place reduction to row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(Raw& a, const detail::FieldData& d, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const std::uint32_t inv = d.inv(a[r][c]);
        for (auto& v : a[r]) v = d.mul(v, inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::uint32_t f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = d.sub(a[i][j], d.mul(f, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j].data() != &field.data()) throw Error(ErrorCode::FieldMismatch, "matrix entry field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (below.cols_ != cols_) throw Error(ErrorCode::LengthMismatch, "stacking matrices of different widths");
    Matrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

Element dot(std::span<const Element> a, std::span<const Element> b) {
    if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "dot product of different lengths");
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty dot product");
    const auto& d = *a.front().data();
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].data() != &d || b[i].data() != &d) throw Error(ErrorCode::FieldMismatch, "dot product fields");
        acc = d.add(acc, d.mul(a[i].index(), b[i].index()));
    }
    return {&d, acc};
}

std::size_t rank(const Matrix& m) {
    Raw a(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).index();
    return echelon(a, m.field().data(), m.cols()).size();
}

std::optional<std::vector<Element>> solve_row_combination(const Matrix& rows, std::span<const Element> target) {
    if (target.size() != rows.cols()) throw Error(ErrorCode::LengthMismatch, "target length");
    const auto& d = rows.field().data();
    // Columns of the system are the given rows; augmented with the target.
    Raw a(rows.cols(), std::vector<std::uint32_t>(rows.rows() + 1));
    for (std::size_t j = 0; j < rows.cols(); ++j) {
        for (std::size_t i = 0; i < rows.rows(); ++i) a[j][i] = rows(i, j).index();
        a[j][rows.rows()] = target[j].index();
    }
    const auto pivots = echelon(a, d, rows.rows());
    for (std::size_t r = pivots.size(); r < a.size(); ++r)
        if (a[r][rows.rows()] != 0) return std::nullopt;
    std::vector<Element> coeffs(rows.rows(), rows.field().zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = rows.field().element(a[r][rows.rows()]);
    return coeffs;
}

}  // namespace qlrc
