#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octic/modp.hpp"
#include "octic/rational.hpp"

namespace octic {

/// Dense row-major matrix over an exact field (Rational or FpElem).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols) requires std::is_same_v<T, Rational>
        : Matrix(rows, cols, Rational(0)) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m;
        m.cols_ = cols;
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const T> values) {
        if (values.size() != cols_) throw std::invalid_argument("row length does not match column count");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }
    void append_row(const std::vector<T>& values) { append_row(std::span<const T>(values)); }
    void truncate_rows(std::size_t n) {
        rows_ = n;
        data_.resize(n * cols_);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

template <class T>
struct RrefResult {
    Matrix<T> reduced;               // zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form. Pivot is the first nonzero entry scanning
/// columns left to right, rows top to bottom; zero rows are dropped.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
    RrefResult<T> out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < m.rows() && is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(lead, piv);
        const T inv = m.at(lead, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k) m.at(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || is_zero(m.at(r, c))) continue;
            const T factor = m.at(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                if (!is_zero(m.at(lead, k))) m.at(r, k) -= factor * m.at(lead, k);
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    m.truncate_rows(lead);
    out.rank = lead;
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).rank;
}

/// Basis (as rows) of the right kernel {v : m v = 0}, read off the RREF.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m, const T& like) {
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivots) is_pivot[c] = true;
    Matrix<T> out(0, m.cols(), zero_like(like));
    std::vector<T> v(m.cols(), zero_like(like));
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), zero_like(like));
        v[free] = one_like(like);
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced.at(r, free);
        out.append_row(v);
    }
    return out;
}

inline RationalMatrix nullspace(const RationalMatrix& m) { return nullspace(m, Rational(0)); }

}  // namespace octic
