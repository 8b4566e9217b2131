#ifndef SUPERSYM_LINEAR_ALGEBRA_HPP
#define SUPERSYM_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace supersym {

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row)
    {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = row.size();
        }
        if (row.size() != cols_) {
            throw std::invalid_argument("row length mismatch");
        }
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;                     ///< reduced row echelon form
    std::vector<std::size_t> pivot_cols; ///< pivot column of row k

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form over the given field.
///
/// The pivot in each column is the candidate entry with the smallest
/// numerator-plus-denominator bit length, which keeps rational entries short.
inline Echelon row_reduce(Matrix a, const Field& field)
{
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(r, c) = field.reduce(a(r, c));
        }
    }
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t best = a.rows();
        std::size_t best_bits = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = row; r < a.rows(); ++r) {
            if (a(r, col) != 0) {
                const std::size_t bits = bit_size(a(r, col));
                if (bits < best_bits) {
                    best = r;
                    best_bits = bits;
                }
            }
        }
        if (best == a.rows()) {
            continue;
        }
        a.swap_rows(row, best);
        const Rational inv = field.inverse(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c) {
            if (a(row, c) != 0) {
                a(row, c) = field.mul(a(row, c), inv);
            }
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) {
                continue;
            }
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (a(row, c) != 0) {
                    a(r, c) = field.sub(a(r, c), field.mul(factor, a(row, c)));
                }
            }
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

inline std::size_t rank(const Matrix& a, const Field& field) { return row_reduce(a, field).rank(); }

/// Basis of {v : a v = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> null_space(const Matrix& a, const Field& field)
{
    const Echelon e = row_reduce(a, field);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < e.rank(); ++k) {
            v[e.pivot_cols[k]] = field.neg(e.reduced(k, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of a x = b (free variables zero), or nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b, const Field& field)
{
    if (b.size() != a.rows()) {
        throw std::invalid_argument("right-hand side length mismatch");
    }
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    const Echelon e = row_reduce(std::move(aug), field);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) {
        return std::nullopt;
    }
    std::vector<Rational> x(a.cols());
    for (std::size_t k = 0; k < e.rank(); ++k) {
        x[e.pivot_cols[k]] = e.reduced(k, a.cols());
    }
    return x;
}

} // namespace supersym

#endif
