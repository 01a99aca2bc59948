#include "fingeo/linalg.hpp"

#include <stdexcept>

namespace fingeo {

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void Matrix::truncate_rows(std::size_t rows) {
    if (rows > rows_) throw std::invalid_argument("truncate_rows beyond size");
    rows_ = rows;
    data_.resize(rows_ * cols_);
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
}

std::vector<std::size_t> row_reduce(const Field& F, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(sel, j));
        }
        const Elem piv_inv = F.inv(m(r, c));
        if (piv_inv != 1) {
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), piv_inv);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem f = F.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j) != 0) m(i, j) = F.add(m(i, j), F.mul(f, m(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return row_reduce(F, m).size(); }

Matrix null_space(const Field& F, const Matrix& m) {
    Matrix r = m;
    const auto pivots = row_reduce(F, r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(r(i, free));
        out.append_row(v);
    }
    return out;
}

Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) acc = F.add(acc, F.mul(a[i], b[i]));
    }
    return acc;
}

bool normalize(const Field& F, std::span<Elem> v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    if (i == v.size()) return false;
    if (v[i] == 1) return true;
    const Elem s = F.inv(v[i]);
    for (std::size_t j = i; j < v.size(); ++j) v[j] = F.mul(v[j], s);
    return true;
}

} // namespace fingeo
