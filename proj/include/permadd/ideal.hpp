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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permadd/algebra.hpp"
#include "permadd/error.hpp"
#include "permadd/lincode.hpp"
#include "permadd/spectral.hpp"

namespace permadd {

/// Exact ratio kept unreduced so that 12/15 prints as 12/15.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Equal as numbers.
    bool equivalent(const Rational& o) const { return num * o.den == o.num * den; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
};

namespace detail {

inline std::vector<std::size_t> normalized_support(const Decomposition& d, std::vector<std::size_t> t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (auto k : t)
        if (k < 1 || k > d.size()) throw InvalidArgument("support index " + std::to_string(k) + " out of range 1.." + std::to_string(d.size()));
    return t;
}

/// tau_nat of the ideal generated by gens: span of all group translates.
inline LinearCode span_of_ideal(const Group& g, const Field& f, const std::vector<AlgebraElement>& gens) {
    std::vector<FqVector> rows;
    for (const auto& m : gens) {
        if (!(m.group() == g) || !(m.field() == f)) throw ContextMismatch("ideal generator outside the algebra");
        for (std::size_t h = 0; h < g.order(); ++h) rows.push_back(apply(AlgebraElement::monomial(g, f, h), m.coefficients()));
    }
    return LinearCode::from_basis(f, g.order(), rows);
}

inline std::vector<AlgebraElement> support_generators(const Decomposition& d, const std::vector<std::size_t>& t) {
    std::vector<AlgebraElement> gens;
    for (auto k : t) gens.push_back(d.idempotent(k));
    return gens;
}

/// Kernel of r -> (r m_1, ..., r m_k) over the given basis of M.
inline LinearCode annihilator_by_kernel(const Group& g, const Field& f, const LinearCode& m) {
    const std::size_t n = g.order();
    std::vector<FqVector> rows;
    for (const auto& b : m.basis()) {
        const Matrix rep = matrix_rep(AlgebraElement(g, b));
        for (std::size_t i = 0; i < n; ++i) rows.push_back(rep.row(i));
    }
    if (rows.empty()) return LinearCode::from_basis(f, n, {Matrix::identity(f, n).row_vectors()});
    Matrix stacked = Matrix::from_rows(f, n, rows);
    return LinearCode::from_basis(f, n, null_space(std::move(stacked)).row_vectors());
}

}  // namespace detail

/// Left ideal M of GF(q)[G] (a group code) together with its annihilator.
class GroupCode {
 public:
    /// M = direct sum of the minimal ideals indexed by t.
    static GroupCode from_support(std::shared_ptr<const Decomposition> d, std::vector<std::size_t> t) {
        if (!d) throw InvalidArgument("from_support: missing decomposition");
        t = detail::normalized_support(*d, std::move(t));
        const Group& g = d->group();
        const Field& f = d->base_field();
        GroupCode out(g, f, detail::span_of_ideal(g, f, detail::support_generators(*d, t)));
        std::size_t expect = 0;
        for (auto k : t) expect += d->component(k).exponent;
        if (out.code_.dimension() != expect) throw InternalError("ideal dimension disagrees with its spectral support");
        std::vector<std::size_t> rest;
        for (std::size_t k = 1; k <= d->size(); ++k)
            if (!std::binary_search(t.begin(), t.end(), k)) rest.push_back(k);
        const LinearCode by_complement = detail::span_of_ideal(g, f, detail::support_generators(*d, rest));
        if (!(by_complement == out.ann_)) throw InternalError("annihilator constructions disagree");
        out.decomposition_ = std::move(d);
        out.support_ = std::move(t);
        return out;
    }

    /// Ideal generated by arbitrary elements; no spectral data attached.
    static GroupCode from_generators(const Group& g, const Field& f, const std::vector<AlgebraElement>& gens) {
        return GroupCode(g, f, detail::span_of_ideal(g, f, gens));
    }

    const Group& group() const { return group_; }
    const Field& field() const { return field_; }
    std::size_t length() const { return group_.order(); }
    std::size_t dimension() const { return code_.dimension(); }
    const std::shared_ptr<const Decomposition>& decomposition() const { return decomposition_; }
    const std::optional<std::vector<std::size_t>>& support() const { return support_; }

    /// tau_nat(M) and tau_nat(Ann(M)).
    const LinearCode& code() const { return code_; }
    const LinearCode& annihilator_code() const { return ann_; }

    std::vector<AlgebraElement> basis() const { return as_elements(code_); }
    std::vector<AlgebraElement> annihilator_basis() const { return as_elements(ann_); }

    GroupCode annihilator() const {
        if (support_) {
            std::vector<std::size_t> rest;
            for (std::size_t k = 1; k <= decomposition_->size(); ++k)
                if (!std::binary_search(support_->begin(), support_->end(), k)) rest.push_back(k);
            return from_support(decomposition_, rest);
        }
        return from_generators(group_, field_, annihilator_basis());
    }

    bool contains(const FqVector& v) const { return code_.contains(v); }
    bool contains(const AlgebraElement& a) const {
        check(a);
        return code_.contains(a.coefficients());
    }
    bool annihilates(const AlgebraElement& a) const {
        check(a);
        return ann_.contains(a.coefficients());
    }

    Rational rate() const { return {dimension(), length()}; }

    /// Covering radius of tau_nat(Ann(M)).
    std::size_t degree_bound() const { return ann_.covering_radius(); }

    /// k minus its nearest annihilator element; acts on M exactly as k does.
    AlgebraElement degree_reduce(const AlgebraElement& k) const {
        check(k);
        return {group_, ann_.coset_leader(k.coefficients())};
    }

    bool is_even_weight() const {
        if (field_.size() != 2) throw InvalidArgument("is_even_weight_ideal requires q = 2");
        return ann_.contains(AlgebraElement::all_ones(group_, field_).coefficients());
    }

 private:
    GroupCode(Group g, Field f, LinearCode code)
        : group_(std::move(g)), field_(std::move(f)), code_(std::move(code)), ann_(detail::annihilator_by_kernel(group_, field_, code_)) {}

    void check(const AlgebraElement& a) const {
        if (!(a.group() == group_) || !(a.field() == field_)) throw ContextMismatch("element outside the algebra of this group code");
    }

    std::vector<AlgebraElement> as_elements(const LinearCode& c) const {
        std::vector<AlgebraElement> out;
        for (auto& v : c.basis()) out.emplace_back(group_, v);
        return out;
    }

    Group group_;
    Field field_;
    LinearCode code_;
    LinearCode ann_;
    std::shared_ptr<const Decomposition> decomposition_;
    std::optional<std::vector<std::size_t>> support_;
};

inline GroupCode ideal_from_T(std::shared_ptr<const Decomposition> d, std::vector<std::size_t> t) {
    return GroupCode::from_support(std::move(d), std::move(t));
}
inline GroupCode ideal_from_generators(const Group& g, const Field& f, const std::vector<AlgebraElement>& gens) {
    return GroupCode::from_generators(g, f, gens);
}
inline GroupCode annihilator(const GroupCode& m) { return m.annihilator(); }
inline Rational code_rate(const GroupCode& m) { return m.rate(); }
inline std::size_t degree_bound(const GroupCode& m) { return m.degree_bound(); }
inline AlgebraElement degree_reduce(const GroupCode& m, const AlgebraElement& k) { return m.degree_reduce(k); }
inline bool is_even_weight_ideal(const GroupCode& m) { return m.is_even_weight(); }

}  // namespace permadd
