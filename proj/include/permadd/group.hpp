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
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "permadd/error.hpp"

namespace permadd {

namespace detail {

struct GroupData {
    std::vector<std::uint32_t> orders;
    std::size_t order = 1;
    std::vector<std::size_t> strides;  // mixed radix, last factor fastest
};

}  // namespace detail

class GroupElement;

/// Finite abelian group Z_{n_1} x ... x Z_{n_r}. Elements are numbered in
/// mixed-radix order with the last factor varying fastest.
class Group {
 public:
    Group() : Group(make({})) {}

    static Group make(std::vector<std::uint32_t> orders) {
        auto d = std::make_shared<detail::GroupData>();
        for (auto o : orders) detail::require(o >= 2, "group_make: every factor order must be >= 2");
        d->orders = std::move(orders);
        d->strides.assign(d->orders.size(), 1);
        std::size_t s = 1;
        for (std::size_t i = d->orders.size(); i-- > 0;) {
            d->strides[i] = s;
            s *= d->orders[i];
        }
        d->order = s;
        Group g(d);
        return g;
    }

    /// Parses "C15", "C3xC3", "c5xc9" (case-insensitive). "1" or "" is the trivial group.
    static Group parse(std::string_view spec) {
        std::string s;
        for (char c : spec)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (s.empty() || s == "1") return make({});
        std::vector<std::uint32_t> orders;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find('x', pos);
            if (next == std::string::npos) next = s.size();
            const std::string tok = s.substr(pos, next - pos);
            if (tok.size() < 2 || tok[0] != 'c' || !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw InvalidArgument("bad group spec '" + std::string(spec) + "'");
            if (tok.size() > 7) throw InvalidArgument("group factor too large in '" + std::string(spec) + "'");
            orders.push_back(static_cast<std::uint32_t>(std::stoul(tok.substr(1))));
            pos = next + 1;
        }
        return make(std::move(orders));
    }

    const std::vector<std::uint32_t>& orders() const { return d_->orders; }
    std::size_t order() const { return d_->order; }
    std::size_t rank() const { return d_->orders.size(); }
    bool is_cyclic() const { return d_->orders.size() <= 1; }

    /// Least common multiple of the factor orders.
    std::uint64_t exponent() const {
        std::uint64_t e = 1;
        for (auto o : d_->orders) e = std::lcm<std::uint64_t>(e, o);
        return e;
    }

    std::string spec() const {
        if (d_->orders.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < d_->orders.size(); ++i) {
            if (i) s += 'x';
            s += 'C' + std::to_string(d_->orders[i]);
        }
        return s;
    }

    std::vector<std::uint32_t> tuple(std::size_t index) const {
        std::vector<std::uint32_t> t(rank());
        for (std::size_t i = 0; i < rank(); ++i) t[i] = static_cast<std::uint32_t>(index / d_->strides[i] % d_->orders[i]);
        return t;
    }

    /// Index of an exponent tuple; entries are reduced modulo the factor orders.
    std::size_t index(const std::vector<std::int64_t>& t) const {
        detail::require(t.size() == rank(), "exponent tuple has wrong length");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            const std::int64_t n = d_->orders[i];
            idx += static_cast<std::size_t>(((t[i] % n) + n) % n) * d_->strides[i];
        }
        return idx;
    }

    std::size_t op(std::size_t a, std::size_t b) const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            const auto n = d_->orders[i];
            const auto s = d_->strides[i];
            r += ((a / s % n + b / s % n) % n) * s;
        }
        return r;
    }

    std::size_t inv(std::size_t a) const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            const auto n = d_->orders[i];
            const auto s = d_->strides[i];
            r += ((n - a / s % n) % n) * s;
        }
        return r;
    }

    std::size_t pow(std::size_t a, std::int64_t k) const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            const std::int64_t n = d_->orders[i];
            const auto s = d_->strides[i];
            const std::int64_t e = static_cast<std::int64_t>(a / s % static_cast<std::size_t>(n));
            const std::int64_t km = ((k % n) + n) % n;
            r += static_cast<std::size_t>(e * km % n) * s;
        }
        return r;
    }

    GroupElement element(std::size_t index) const;
    GroupElement identity() const;

    friend bool operator==(const Group& a, const Group& b) { return a.d_ == b.d_ || a.d_->orders == b.d_->orders; }

 private:
    explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::GroupData> d_;
};

inline Group group_make(std::vector<std::uint32_t> orders) { return Group::make(std::move(orders)); }

class GroupElement {
 public:
    GroupElement(Group g, std::size_t index) : group_(std::move(g)), index_(index) {
        detail::require(index_ < group_.order(), "group element index out of range");
    }

    const Group& group() const { return group_; }
    std::size_t index() const { return index_; }
    std::vector<std::uint32_t> tuple() const { return group_.tuple(index_); }

    GroupElement operator*(const GroupElement& o) const {
        if (!(group_ == o.group_)) throw ContextMismatch("group mismatch");
        return {group_, group_.op(index_, o.index_)};
    }
    GroupElement inverse() const { return {group_, group_.inv(index_)}; }
    GroupElement pow(std::int64_t k) const { return {group_, group_.pow(index_, k)}; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.group_ == b.group_ && a.index_ == b.index_; }

 private:
    Group group_;
    std::size_t index_;
};

inline GroupElement Group::element(std::size_t index) const { return {*this, index}; }
inline GroupElement Group::identity() const { return {*this, 0}; }

inline GroupElement group_op(const GroupElement& g, const GroupElement& h) { return g * h; }
inline GroupElement group_inv(const GroupElement& g) { return g.inverse(); }
inline GroupElement group_pow(const GroupElement& g, std::int64_t k) { return g.pow(k); }

/// A bijection on [0, n) given by its image array.
class Permutation {
 public:
    explicit Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (auto v : image_) {
            if (v >= image_.size() || seen[v]) throw InvalidArgument("image array is not a permutation");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::uint32_t> im(n);
        std::iota(im.begin(), im.end(), 0u);
        return Permutation(std::move(im));
    }

    std::size_t size() const { return image_.size(); }
    std::uint32_t operator[](std::size_t i) const { return image_[i]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    /// (*this o other)[i] = (*this)[other[i]].
    Permutation compose(const Permutation& other) const {
        detail::require(other.size() == size(), "permutation size mismatch");
        std::vector<std::uint32_t> im(size());
        for (std::size_t i = 0; i < size(); ++i) im[i] = image_[other.image_[i]];
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
    std::vector<std::uint32_t> image_;
};

/// Left multiplication by g: index(h) -> index(g h).
inline Permutation regular_permutation(const GroupElement& g) {
    const auto& G = g.group();
    std::vector<std::uint32_t> im(G.order());
    for (std::size_t h = 0; h < G.order(); ++h) im[h] = static_cast<std::uint32_t>(G.op(g.index(), h));
    return Permutation(std::move(im));
}

/// Orbit of g under g -> g^q. Members are listed as rep, rep^q, rep^(q^2), ...
struct ConjugacyClass {
    std::size_t representative = 0;
    std::vector<std::size_t> members;
    std::size_t size() const { return members.size(); }
};

/// q-conjugacy classes: identity class first, then by decreasing size, ties
/// broken by least member index. The representative is the least member.
inline std::vector<ConjugacyClass> conjugacy_classes(const Group& group, std::uint64_t q) {
    detail::require(std::gcd<std::uint64_t>(group.order(), q) == 1, "conjugacy_classes: gcd(|G|, q) must be 1");
    const std::size_t n = group.order();
    std::vector<bool> done(n, false);
    std::vector<ConjugacyClass> classes;
    for (std::size_t g = 0; g < n; ++g) {
        if (done[g]) continue;
        ConjugacyClass c;
        c.representative = g;
        std::size_t x = g;
        do {
            c.members.push_back(x);
            done[x] = true;
            x = group.pow(x, static_cast<std::int64_t>(q % group.exponent()));
        } while (x != g);
        classes.push_back(std::move(c));
    }
    std::stable_sort(classes.begin() + 1, classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.size() > b.size();
    });
    return classes;
}

}  // namespace permadd
