// Copyright 2026 The permadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "permadd/error.hpp"
#include "permadd/fq_vector.hpp"
#include "permadd/gf.hpp"

namespace permadd {

/// Dense matrix over a finite field, row-major.
class Matrix {
 public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<FqVector>& rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InvalidArgument("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].get(c);
        }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    FqVector row(std::size_t r) const {
        FqVector v(field_, cols_);
        for (std::size_t c = 0; c < cols_; ++c) v.set(c, (*this)(r, c));
        return v;
    }

    std::vector<FqVector> row_vectors() const {
        std::vector<FqVector> out;
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw InvalidArgument("matrix dimension mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
            }
        return r;
    }

    FqVector operator*(const FqVector& v) const {
        if (v.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
        FqVector out(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Elem acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v.get(j)));
            out.set(i, acc);
        }
        return out;
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }

 private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduces m to reduced row-echelon form in place, drops zero rows and
/// returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix trimmed(f, r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) trimmed(i, j) = m(i, j);
    m = std::move(trimmed);
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Basis (as rows) of { x : m x = 0 }.
inline Matrix null_space(Matrix m) {
    const Field& f = m.field();
    const std::size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix out(f, n - pivots.size(), n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out(row, pivots[i]) = f.neg(m(i, free));
        ++row;
    }
    return out;
}

/// Inverse of a square matrix; throws InvalidArgument when singular.
inline Matrix inverse(const Matrix& m) {
    detail::require(m.rows() == m.cols(), "inverse: matrix must be square");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidArgument("inverse: matrix is singular");
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Row spaces of a and b coincide.
inline bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    Matrix ra = a, rb = b;
    rref(ra);
    rref(rb);
    return ra == rb;
}

}  // namespace permadd
