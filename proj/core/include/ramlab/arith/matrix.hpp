#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ramlab/arith/ring.hpp"
#include "ramlab/errors.hpp"

namespace ramlab {

/// Row-major dense matrix of ring elements.
template <class Elem>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Elem& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = cols;
        for (const auto& r : rows) {
            if (r.size() != cols) throw DomainError("ragged matrix rows");
            m.data_.insert(m.data_.end(), r.begin(), r.end());
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Elem> row(std::size_t i) const {
        return std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Row-style Hermite normal form over a Euclidean ring.
///
/// Columns are processed right to left, so a full-rank n x n result is lower
/// triangular: row i has its pivot in column i and zeros to the right. Pivots
/// are canonical associates and the other entries of a pivot column are
/// reduced modulo the pivot. Rows are returned ordered by pivot column.
template <EuclideanRing R>
Matrix<typename R::Elem> hermite_rows(const R& ring, const std::vector<std::vector<typename R::Elem>>& gens,
                                      std::size_t cols) {
    using E = typename R::Elem;
    std::vector<std::vector<E>> work;
    for (const auto& g : gens) {
        bool nonzero = false;
        for (const auto& e : g) nonzero = nonzero || !ring.is_zero(e);
        if (nonzero) work.push_back(g);
    }
    std::vector<std::pair<std::size_t, std::vector<E>>> pivots;  // (column, row)
    for (std::size_t j = cols; j-- > 0;) {
        // Pairwise Euclid on column j gathers the gcd into the first nonzero row.
        std::size_t first = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (ring.is_zero(work[i][j])) continue;
            if (first == work.size()) {
                first = i;
                continue;
            }
            auto& a = work[first];
            auto& b = work[i];
            while (!ring.is_zero(b[j])) {
                const E q = ring.divmod(a[j], b[j]).first;
                for (std::size_t c = 0; c <= j; ++c) a[c] = ring.sub(a[c], ring.mul(q, b[c]));
                std::swap(a, b);
            }
        }
        std::size_t pivot_idx = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (!ring.is_zero(work[i][j])) {
                pivot_idx = i;
                break;
            }
        }
        if (pivot_idx == work.size()) continue;
        std::vector<E> prow = std::move(work[pivot_idx]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot_idx));
        const E u = ring.normalizer(prow[j]);
        for (std::size_t c = 0; c <= j; ++c) prow[c] = ring.mul(prow[c], u);
        for (auto& [pc, other] : pivots) {
            (void)pc;
            if (ring.is_zero(other[j])) continue;
            const E q = ring.divmod(other[j], prow[j]).first;
            for (std::size_t c = 0; c <= j; ++c) other[c] = ring.sub(other[c], ring.mul(q, prow[c]));
        }
        pivots.emplace_back(j, std::move(prow));
    }
    Matrix<E> out(pivots.size(), cols, ring.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const auto& prow = pivots[pivots.size() - 1 - i].second;
        for (std::size_t c = 0; c < cols; ++c) out(i, c) = prow[c];
    }
    return out;
}

/// Coordinates of v in the row basis of a full-rank lower-triangular matrix
/// (as produced by hermite_rows); nullopt if v is not in the row module.
template <EuclideanRing R>
std::optional<std::vector<typename R::Elem>> solve_lower(const R& ring, const Matrix<typename R::Elem>& basis,
                                                         std::vector<typename R::Elem> v) {
    const std::size_t n = basis.rows();
    std::vector<typename R::Elem> coords(n, ring.zero());
    for (std::size_t j = n; j-- > 0;) {
        if (ring.is_zero(v[j])) continue;
        auto [q, r] = ring.divmod(v[j], basis(j, j));
        if (!ring.is_zero(r)) return std::nullopt;
        coords[j] = q;
        for (std::size_t c = 0; c <= j; ++c) v[c] = ring.sub(v[c], ring.mul(q, basis(j, c)));
    }
    return coords;
}

/// Fraction-free (Bareiss) determinant over an integral domain.
template <EuclideanRing R>
typename R::Elem determinant(const R& ring, Matrix<typename R::Elem> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return ring.one();
    bool negate = false;
    typename R::Elem prev = ring.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(m(k, k))) {
            std::size_t swap_with = n;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!ring.is_zero(m(i, k))) {
                    swap_with = i;
                    break;
                }
            }
            if (swap_with == n) return ring.zero();
            m.swap_rows(k, swap_with);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = ring.sub(ring.mul(m(i, j), m(k, k)), ring.mul(m(i, k), m(k, j)));
                auto [q, r] = ring.divmod(num, prev);
                if (!ring.is_zero(r)) throw DomainError("Bareiss division was not exact");
                m(i, j) = q;
            }
        }
        prev = m(k, k);
    }
    auto det = m(n - 1, n - 1);
    return negate ? ring.neg(det) : det;
}

/// Reduced row echelon form over a field; returns the nonzero rows.
template <Field F>
std::vector<std::vector<typename F::Elem>> row_reduce(const F& field, std::vector<std::vector<typename F::Elem>> rows,
                                                      std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (!field.is_zero(rows[i][c])) {
                piv = i;
                break;
            }
        }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const auto inv = field.inv(rows[rank][c]);
        for (auto& e : rows[rank]) e = field.mul(e, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || field.is_zero(rows[i][c])) continue;
            const auto f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

template <Field F>
std::size_t rank(const F& field, const std::vector<std::vector<typename F::Elem>>& rows, std::size_t cols) {
    return row_reduce(field, rows, cols).size();
}

/// Basis of the right kernel {x : M x = 0} of an m x n matrix given by rows.
template <Field F>
std::vector<std::vector<typename F::Elem>> kernel(const F& field, const std::vector<std::vector<typename F::Elem>>& rows,
                                                  std::size_t cols) {
    auto rref = row_reduce(field, rows, cols);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& r : rref) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (!field.is_zero(r[c])) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    std::vector<std::vector<typename F::Elem>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Elem> v(cols, field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < rref.size(); ++i) v[pivot_col[i]] = field.neg(rref[i][free]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ramlab
