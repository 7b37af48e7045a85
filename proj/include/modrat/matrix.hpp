#pragma once

#include "modrat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace modrat {

// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    // Throws DomainError on ragged input.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool row_is_zero(std::size_t r) const;

    RationalMatrix select_rows(std::span<const std::size_t> indices) const;
    RationalMatrix select_cols(std::span<const std::size_t> indices) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Reduced row echelon form; zero rows dropped. Two row sets span the same
// space iff their echelon forms are equal.
RationalMatrix row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

// Throws DomainError for non-square input.
Rational determinant(RationalMatrix m);

}  // namespace modrat
