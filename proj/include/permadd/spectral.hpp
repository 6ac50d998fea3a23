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
#include <memory>
#include <vector>

#include "permadd/algebra.hpp"
#include "permadd/error.hpp"
#include "permadd/gf.hpp"
#include "permadd/group.hpp"
#include "permadd/linalg.hpp"

namespace permadd {

/// One component of the decomposition: a q-conjugacy class of G and the
/// character chi_j(g) = prod_i omega_i^(j_i g_i) of its representative j.
struct SpectralComponent {
    ConjugacyClass cls;
    std::vector<std::uint32_t> representative;  // exponent tuple j
    std::uint32_t exponent = 1;                 // class size l_k
    std::uint64_t field_size = 0;               // q^{l_k}
    std::vector<Elem> character;                // chi_k(g) for every g, in the splitting field
};

/// Spectrum: one splitting-field element per component.
using Spectrum = std::vector<Elem>;

/// GF(q)[G] ~ GF(q_1) x ... x GF(q_t) for abelian G with gcd(|G|, q) = 1.
/// All components are computed inside the single splitting field GF(q^E),
/// E = mult_order(q, exponent(G)). Component indices are 1-based in the
/// public API; index 1 is the identity class.
class Decomposition {
 public:
    Decomposition(Group group, std::uint64_t q) : group_(std::move(group)), q_(q) {
        auto pp = detail::prime_power(q);
        detail::require(pp.has_value(), "decompose: q must be a prime power");
        detail::require(std::gcd<std::uint64_t>(group_.order(), q) == 1, "decompose: gcd(|G|, q) must be 1");
        base_ = Field::make(pp->first, pp->second);
        auto rou = root_of_unity(q, group_.exponent());
        split_ = rou.field;
        embed_ = FieldEmbedding(base_, split_);
        const std::uint64_t ex = group_.exponent();

        const std::size_t n = group_.order();
        for (auto& c : conjugacy_classes(group_, q)) {
            SpectralComponent comp;
            comp.representative = group_.tuple(c.representative);
            comp.exponent = static_cast<std::uint32_t>(c.size());
            comp.field_size = detail::ipow(q, comp.exponent);
            comp.character.resize(n);
            for (std::size_t g = 0; g < n; ++g) comp.character[g] = character_value(rou.omega, ex, comp.representative, group_.tuple(g));
            comp.cls = std::move(c);
            components_.push_back(std::move(comp));
        }

        // Full character table over all j in G, then its inverse.
        Matrix table(split_, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto jt = group_.tuple(j);
            for (std::size_t g = 0; g < n; ++g) table(j, g) = character_value(rou.omega, ex, jt, group_.tuple(g));
        }
        inverse_table_ = inverse(table);

        // For every j: the component containing it and the Frobenius power s
        // with j = q^s * rep.
        dual_component_.assign(n, 0);
        dual_power_.assign(n, 0);
        for (std::size_t k = 0; k < components_.size(); ++k) {
            const auto& mem = components_[k].cls.members;
            for (std::size_t s = 0; s < mem.size(); ++s) {
                dual_component_[mem[s]] = k;
                dual_power_[mem[s]] = static_cast<std::uint32_t>(s);
            }
        }
        q_degree_ = pp->second;
    }

    const Group& group() const { return group_; }
    std::uint64_t q() const { return q_; }
    const Field& base_field() const { return base_; }
    const Field& splitting_field() const { return split_; }
    const FieldEmbedding& base_embedding() const { return embed_; }
    std::size_t size() const { return components_.size(); }

    /// Component k, 1-based.
    const SpectralComponent& component(std::size_t k) const {
        detail::require(k >= 1 && k <= components_.size(), "component index out of range");
        return components_[k - 1];
    }
    const std::vector<SpectralComponent>& components() const { return components_; }

    std::vector<std::uint64_t> component_sizes() const {
        std::vector<std::uint64_t> s;
        for (const auto& c : components_) s.push_back(c.field_size);
        return s;
    }

    /// Degree of the subfield of component k over the prime field.
    std::uint32_t subfield_degree(std::size_t k) const { return component(k).exponent * q_degree_; }

    bool in_component_subfield(std::size_t k, Elem x) const { return split_.in_subfield(x, subfield_degree(k)); }

    /// Index (1-based) of the component whose class contains group element g.
    std::size_t component_of(std::size_t g) const { return dual_component_.at(g) + 1; }

    Spectrum forward(const AlgebraElement& a) const {
        check(a);
        Spectrum s(components_.size(), 0);
        for (std::size_t k = 0; k < components_.size(); ++k) {
            Elem acc = 0;
            for (std::size_t g = 0; g < group_.order(); ++g)
                if (const Elem m = a.coefficient(g)) acc = split_.add(acc, split_.mul(embed_(m), components_[k].character[g]));
            s[k] = acc;
        }
        return s;
    }

    AlgebraElement inverse_transform(const Spectrum& s) const {
        detail::require(s.size() == components_.size(), "spectrum has wrong number of components");
        for (std::size_t k = 0; k < s.size(); ++k) {
            detail::require(split_.contains(s[k]), "spectrum value outside splitting field");
            if (!in_component_subfield(k + 1, s[k]))
                throw InvalidArgument("phi_inverse: component " + std::to_string(k + 1) + " is outside its subfield");
        }
        const std::size_t n = group_.order();
        // full transform value at j = q^s rep_k is s_k^(q^s)
        std::vector<Elem> full(n);
        for (std::size_t j = 0; j < n; ++j)
            full[j] = split_.frobenius(s[dual_component_[j]], q_degree_ * dual_power_[j]);
        FqVector coeffs(base_, n);
        for (std::size_t g = 0; g < n; ++g) {
            Elem acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (full[j]) acc = split_.add(acc, split_.mul(inverse_table_(g, j), full[j]));
            auto pre = embed_.preimage(acc);
            if (!pre) throw InternalError("phi_inverse: coefficient outside base field");
            coeffs.set(g, *pre);
        }
        return {group_, coeffs};
    }

    /// Primitive idempotent generating the k-th minimal ideal.
    AlgebraElement idempotent(std::size_t k) const {
        Spectrum s(components_.size(), 0);
        component(k);
        s[k - 1] = 1;
        return inverse_transform(s);
    }

 private:
    Elem character_value(Elem omega, std::uint64_t ex, const std::vector<std::uint32_t>& j, const std::vector<std::uint32_t>& g) const {
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::uint64_t n = group_.orders()[i];
            e = (e + (static_cast<std::uint64_t>(j[i]) * g[i] % n) * (ex / n)) % ex;
        }
        return split_.pow(omega, e);
    }

    void check(const AlgebraElement& a) const {
        if (!(a.group() == group_) || !(a.field() == base_)) throw ContextMismatch("algebra element does not belong to this decomposition");
    }

    Group group_;
    std::uint64_t q_;
    std::uint32_t q_degree_ = 1;
    Field base_;
    Field split_;
    FieldEmbedding embed_;
    std::vector<SpectralComponent> components_;
    Matrix inverse_table_;
    std::vector<std::size_t> dual_component_;
    std::vector<std::uint32_t> dual_power_;
};

inline std::shared_ptr<const Decomposition> decompose(const Group& group, std::uint64_t q) {
    return std::make_shared<const Decomposition>(group, q);
}

inline Spectrum phi_forward(const Decomposition& d, const AlgebraElement& a) { return d.forward(a); }
inline AlgebraElement phi_inverse(const Decomposition& d, const Spectrum& s) { return d.inverse_transform(s); }
inline AlgebraElement minimal_ideal_generator(const Decomposition& d, std::size_t k) { return d.idempotent(k); }

/// Number of distinct elements of GF(2^l0) that are sums of at most delta of
/// the powers 1, a, ..., a^(n-1) of a primitive n-th root of unity a.
inline std::uint64_t k_delta(std::uint64_t n, std::uint64_t delta) {
    detail::require(n % 2 == 1, "k_delta: n must be odd");
    detail::require(delta <= n, "k_delta: delta must be in [0, n]");
    auto rou = root_of_unity(2, n);
    const Field& f = rou.field;
    std::vector<Elem> powers(n);
    for (std::uint64_t i = 0; i < n; ++i) powers[i] = f.pow(rou.omega, i);
    std::vector<bool> reached(f.size(), false);
    std::vector<Elem> frontier{0};
    reached[0] = true;
    std::uint64_t count = 1;
    // R_{w+1} = R_w + (R_w + P)
    for (std::uint64_t w = 0; w < delta && count < f.size(); ++w) {
        std::vector<Elem> next;
        for (Elem x : frontier)
            for (Elem pw : powers) {
                const Elem y = f.add(x, pw);
                if (!reached[y]) {
                    reached[y] = true;
                    next.push_back(y);
                    ++count;
                }
            }
        frontier = std::move(next);
    }
    return count;
}

}  // namespace permadd
