#include "modrat/matrix.hpp"

#include <utility>

namespace modrat {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DomainError("entry count does not match matrix shape");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    *this = from_rows(copy);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DomainError("ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), cols, std::move(entries));
}

bool RationalMatrix::row_is_zero(std::size_t r) const {
    for (const auto& v : row(r)) {
        if (v != 0) return false;
    }
    return true;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> indices) const {
    RationalMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
    }
    return out;
}

RationalMatrix RationalMatrix::select_cols(std::span<const std::size_t> indices) const {
    RationalMatrix out(rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < indices.size(); ++j) out(r, j) = (*this)(r, indices[j]);
    }
    return out;
}

namespace {

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

RationalMatrix row_echelon(RationalMatrix m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col) == 0) ++r;
        if (r == m.rows()) continue;
        swap_rows(m, pivot_row, r);
        const Rational inv = 1 / m(pivot_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
        for (std::size_t other = 0; other < m.rows(); ++other) {
            if (other == pivot_row || m(other, col) == 0) continue;
            const Rational factor = m(other, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(other, c) -= factor * m(pivot_row, c);
        }
        ++pivot_row;
    }
    std::vector<Rational> kept(m.entries().begin(),
                               m.entries().begin() + static_cast<std::ptrdiff_t>(pivot_row * m.cols()));
    return RationalMatrix(pivot_row, m.cols(), std::move(kept));
}

std::size_t rank(const RationalMatrix& input) {
    // Full pivoting: any nonzero entry of the trailing block is a valid pivot.
    RationalMatrix m = input;
    std::size_t r = 0;
    std::vector<std::size_t> col_order(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) col_order[c] = c;
    for (; r < m.rows() && r < m.cols(); ++r) {
        std::size_t pr = m.rows(), pc = m.cols();
        for (std::size_t i = r; i < m.rows() && pr == m.rows(); ++i) {
            for (std::size_t j = r; j < m.cols(); ++j) {
                if (m(i, col_order[j]) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr == m.rows()) break;
        swap_rows(m, r, pr);
        std::swap(col_order[r], col_order[pc]);
        const std::size_t col = col_order[r];
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            const Rational factor = m(i, col) / m(r, col);
            for (std::size_t j = r; j < m.cols(); ++j) m(i, col_order[j]) -= factor * m(r, col_order[j]);
        }
    }
    return r;
}

Rational determinant(RationalMatrix m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && m(r, col) == 0) ++r;
        if (r == n) return 0;
        if (r != col) {
            swap_rows(m, r, col);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

}  // namespace modrat
