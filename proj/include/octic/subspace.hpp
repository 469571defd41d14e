#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "octic/matrix.hpp"

namespace octic {

/// Subspace of K^n stored as the RREF of a basis, so equal subspaces have
/// identical representations.
template <class T>
class Subspace {
public:
    Subspace(std::size_t ambient, const T& like) : zero_(zero_like(like)), basis_(0, ambient, zero_) {}

    static Subspace span(const Matrix<T>& generators, const T& like) {
        Subspace s(generators.cols(), like);
        auto red = rref(generators);
        s.basis_ = std::move(red.reduced);
        s.pivots_ = std::move(red.pivots);
        return s;
    }

    static Subspace ambient(std::size_t n, const T& like) {
        Matrix<T> id(n, n, zero_like(like));
        for (std::size_t i = 0; i < n; ++i) id.at(i, i) = one_like(like);
        return span(id, like);
    }

    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] std::size_t ambient_dim() const { return basis_.cols(); }
    [[nodiscard]] const Matrix<T>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after elimination against the basis; zero iff v lies in the span.
    [[nodiscard]] std::vector<T> reduce(std::span<const T> v) const {
        check_length(v.size());
        std::vector<T> w(v.begin(), v.end());
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const std::size_t c = pivots_[r];
            if (is_zero(w[c])) continue;
            const T factor = w[c];
            for (std::size_t k = c; k < w.size(); ++k) {
                if (!is_zero(basis_.at(r, k))) w[k] -= factor * basis_.at(r, k);
            }
        }
        return w;
    }

    [[nodiscard]] bool contains(std::span<const T> v) const {
        for (const auto& x : reduce(v))
            if (!is_zero(x)) return false;
        return true;
    }

    [[nodiscard]] bool contains(const Subspace& other) const {
        check_length(other.ambient_dim());
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    /// Annihilator in the dual space, using the standard pairing.
    [[nodiscard]] Subspace annihilator() const {
        if (dim() == 0) return ambient(ambient_dim(), zero_);
        return span(nullspace(basis_, zero_), zero_);
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        a.check_length(b.ambient_dim());
        Matrix<T> stacked = a.basis_;
        for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis_.row(r));
        return span(stacked, a.zero_);
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        a.check_length(b.ambient_dim());
        return (a.annihilator() + b.annihilator()).annihilator();
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    void check_length(std::size_t n) const {
        if (n != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    }

    T zero_;
    Matrix<T> basis_;
    std::vector<std::size_t> pivots_;
};

template <class T>
Subspace<T> subspace_sum(const Subspace<T>& a, const Subspace<T>& b) {
    return a + b;
}

template <class T>
Subspace<T> subspace_intersect(const Subspace<T>& a, const Subspace<T>& b) {
    return intersect(a, b);
}

/// Incrementally built semi-echelon basis: each stored row has a leading 1 at
/// a column where every later row is zero, so reducing in insertion order
/// suffices. Only tracks rank and membership.
template <class T>
class EchelonAccumulator {
public:
    EchelonAccumulator(std::size_t ambient, const T& like) : n_(ambient), zero_(zero_like(like)) {}

    /// Adds v; returns true when v was independent of the rows so far.
    bool add(std::vector<T> v) {
        if (v.size() != n_) throw std::invalid_argument("ambient dimension mismatch");
        reduce_in_place(v);
        std::size_t lead = 0;
        while (lead < n_ && is_zero(v[lead])) ++lead;
        if (lead == n_) return false;
        const T inv = v[lead].inverse();
        for (std::size_t k = lead; k < n_; ++k) v[k] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
    }

    [[nodiscard]] bool contains(std::vector<T> v) const {
        reduce_in_place(v);
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t ambient_dim() const { return n_; }

private:
    void reduce_in_place(std::vector<T>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = pivots_[r];
            if (is_zero(v[c])) continue;
            const T factor = v[c];
            const auto& row = rows_[r];
            for (std::size_t k = c; k < n_; ++k) {
                if (!is_zero(row[k])) v[k] -= factor * row[k];
            }
        }
    }

    std::size_t n_;
    T zero_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace octic
