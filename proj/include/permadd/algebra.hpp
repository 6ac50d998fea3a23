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
#include "permadd/group.hpp"
#include "permadd/linalg.hpp"

namespace permadd {

/// Edge symbols are plain length-n vectors over GF(q).
using EdgeVector = FqVector;

/// Element sum_g a_g g of the group algebra GF(q)[G]. The coefficient vector
/// in enumeration order is exactly tau_nat of the element.
class AlgebraElement {
 public:
    AlgebraElement(Group g, Field f) : group_(std::move(g)), coeffs_(f, group_.order()) {}

    AlgebraElement(Group g, FqVector coeffs) : group_(std::move(g)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != group_.order()) throw InvalidArgument("coefficient vector length must equal |G|");
    }

    /// c * g.
    static AlgebraElement monomial(const Group& g, const Field& f, std::size_t index, Elem c = 1) {
        return {g, FqVector::unit(f, g.order(), index, c)};
    }

    static AlgebraElement one(const Group& g, const Field& f) { return monomial(g, f, 0); }

    static AlgebraElement all_ones(const Group& g, const Field& f) {
        FqVector v(f, g.order());
        for (std::size_t i = 0; i < g.order(); ++i) v.set(i, 1);
        return {g, v};
    }

    const Group& group() const { return group_; }
    const Field& field() const { return coeffs_.field(); }
    const FqVector& coefficients() const { return coeffs_; }
    Elem coefficient(std::size_t g) const { return coeffs_.get(g); }
    std::size_t weight() const { return coeffs_.weight(); }
    bool is_zero() const { return coeffs_.is_zero(); }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check(o);
        coeffs_ += o.coeffs_;
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check(o);
        coeffs_ -= o.coeffs_;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    /// Group convolution: (ab)_g = sum_h a_h b_{h^-1 g}.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        const Group& G = a.group_;
        const Field& f = a.field();
        const std::size_t n = G.order();
        std::vector<std::size_t> support;
        for (std::size_t h = 0; h < n; ++h)
            if (a.coeffs_.get(h)) support.push_back(h);
        FqVector out(f, n);
        for (std::size_t g = 0; g < n; ++g) {
            Elem acc = 0;
            for (auto h : support) {
                const Elem bv = b.coeffs_.get(G.op(G.inv(h), g));
                if (bv) acc = f.add(acc, f.mul(a.coeffs_.get(h), bv));
            }
            out.set(g, acc);
        }
        return {G, out};
    }

    AlgebraElement scaled(Elem c) const { return {group_, coeffs_.scaled(c)}; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
    }

 private:
    void check(const AlgebraElement& o) const {
        if (!(group_ == o.group_) || !(field() == o.field())) throw ContextMismatch("algebra element context mismatch");
    }

    Group group_;
    FqVector coeffs_;
};

inline AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
inline AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
inline std::size_t weight(const AlgebraElement& a) { return a.weight(); }

inline EdgeVector tau_nat(const AlgebraElement& a) { return a.coefficients(); }

inline AlgebraElement tau_inv(const Group& g, const EdgeVector& v) {
    if (v.size() != g.order()) throw InvalidArgument("tau_inv: vector length must equal |G|");
    return {g, v};
}

/// sum_g r_g rho_g as a dense n x n matrix: entry (k, h) is r_{k h^-1}.
inline Matrix matrix_rep(const AlgebraElement& a) {
    const Group& G = a.group();
    const std::size_t n = G.order();
    Matrix m(a.field(), n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t h = 0; h < n; ++h) m(k, h) = a.coefficient(G.op(k, G.inv(h)));
    return m;
}

namespace detail {

/// rho_g applied to v: out[g h] = v[h].
inline EdgeVector permute_by(const Group& G, std::size_t g, const EdgeVector& v) {
    if (G.is_cyclic()) return v.rotated(g);
    return v.permuted(regular_permutation(G.element(g)).image());
}

}  // namespace detail

/// Permute-and-add action: sum over the support of a of r_g (rho_g v).
/// Applies exactly weight(a) permutations; no dense matrix is formed.
inline EdgeVector apply(const AlgebraElement& a, const EdgeVector& v) {
    const Group& G = a.group();
    if (v.size() != G.order()) throw InvalidArgument("apply: vector length must equal |G|");
    if (!(v.field() == a.field())) throw ContextMismatch("apply: field mismatch");
    const FqVector& c = a.coefficients();
    if (a.weight() == 1) {
        for (std::size_t g = 0; g < G.order(); ++g)
            if (const Elem r = c.get(g)) {
                auto out = detail::permute_by(G, g, v);
                return r == 1 ? out : out.scaled(r);
            }
    }
    EdgeVector out(v.field(), v.size());
    for (std::size_t g = 0; g < G.order(); ++g)
        if (const Elem r = c.get(g)) out.add_scaled(detail::permute_by(G, g, v), r);
    return out;
}

/// Drops the last coordinate of a vector whose coordinates sum to zero.
inline FqVector bit_truncate(const EdgeVector& v) {
    if (v.coordinate_sum() != 0) throw InvalidArgument("bit_truncate: coordinates do not sum to zero");
    return v.truncated();
}

/// Appends minus the sum of the coordinates.
inline EdgeVector bit_expand(const FqVector& w) { return w.extended(w.field().neg(w.coordinate_sum())); }

}  // namespace permadd
