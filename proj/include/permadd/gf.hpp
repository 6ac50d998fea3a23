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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permadd/error.hpp"

namespace permadd {

/// Field element encoding: the base-p digits of the integer are the
/// polynomial-basis coefficients, least significant digit = coefficient of x^0.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = 1u << 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// (p, a) with q = p^a, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    std::uint32_t a = 0;
    while (q > 1) {
        q /= f[0];
        ++a;
    }
    return std::make_pair(static_cast<std::uint32_t>(f[0]), a);
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Smallest l >= 1 with q^l = 1 (mod n). mult_order(q, 1) = 1.
inline std::uint64_t mult_order(std::uint64_t q, std::uint64_t n) {
    detail::require(n >= 1, "mult_order: n must be positive");
    detail::require(std::gcd(q, n) == 1, "mult_order: gcd(q, n) must be 1");
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    std::uint64_t l = 1;
    while (x != 1) {
        x = x * (q % n) % n;
        ++l;
    }
    return l;
}

/// Number of j in [1, n-1] coprime to n, with the convention phi(1) = 1.
inline std::uint64_t euler_totient(std::uint64_t n) {
    detail::require(n >= 1, "euler_totient: n must be positive");
    if (n == 1) return 1;
    std::uint64_t c = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1) ++c;
    return c;
}

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t size = 0;
    std::vector<std::uint32_t> modulus;  // m + 1 coefficients, monic
    Elem primitive = 0;
    std::vector<Elem> exp;            // exp[i] = primitive^i, length size - 1
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::uint32_t> pow_p; // p^i for i <= m
};

using Digits = std::vector<std::uint32_t>;

inline Digits to_digits(std::uint64_t v, std::uint32_t p, std::size_t len) {
    Digits d(len, 0);
    for (std::size_t i = 0; i < len && v; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return d;
}

inline std::uint64_t from_digits(const Digits& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

inline void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

/// Remainder of a modulo b over GF(p); b must have nonzero leading coefficient.
inline Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint32_t f = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
        trim(a);
    }
    return a;
}

inline Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& mod, std::uint32_t p) {
    Digits r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(r), mod, p);
}

/// Irreducibility of a monic polynomial over GF(p) by trial division with
/// every monic polynomial of degree <= deg/2.
inline bool is_irreducible(const Digits& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t low = 0; low < count; ++low) {
            Digits g = to_digits(low, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::shared_ptr<const FieldData> build_field(std::uint32_t p, std::uint32_t m) {
    auto fd = std::make_shared<FieldData>();
    fd->p = p;
    fd->m = m;
    fd->size = static_cast<std::uint32_t>(ipow(p, m));
    for (std::uint32_t i = 0; i <= m; ++i) fd->pow_p.push_back(static_cast<std::uint32_t>(ipow(p, i)));

    // Lexicographically least monic irreducible: smallest integer encoding of
    // the low coefficients, highest-degree coefficient compared first.
    for (std::uint64_t low = 0; low < fd->size; ++low) {
        Digits f = to_digits(low, p, m);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            fd->modulus = f;
            break;
        }
    }
    if (fd->modulus.empty()) throw InternalError("no irreducible polynomial found");

    const std::uint64_t order = fd->size - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [&](std::uint64_t base, std::uint64_t e) {
        Digits r{1};
        Digits b = to_digits(base, p, m);
        trim(b);
        while (e) {
            if (e & 1) r = poly_mulmod(r, b, fd->modulus, p);
            b = poly_mulmod(b, b, fd->modulus, p);
            e >>= 1;
        }
        r.resize(m, 0);
        return from_digits(r, p);
    };
    if (order == 1) {
        fd->primitive = 1;
    } else {
        for (std::uint64_t c = 1; c < fd->size; ++c) {
            bool ok = slow_pow(c, order) == 1;
            for (auto r : factors)
                if (ok && slow_pow(c, order / r) == 1) ok = false;
            if (ok) {
                fd->primitive = static_cast<Elem>(c);
                break;
            }
        }
    }

    fd->exp.resize(order);
    fd->log.assign(fd->size, 0);
    Digits cur{1};
    Digits g = to_digits(fd->primitive, p, m);
    trim(g);
    for (std::uint64_t i = 0; i < order; ++i) {
        Digits padded = cur;
        padded.resize(m, 0);
        const auto v = static_cast<Elem>(from_digits(padded, p));
        fd->exp[i] = v;
        fd->log[v] = static_cast<std::uint32_t>(i);
        cur = poly_mulmod(cur, g, fd->modulus, p);
    }
    return fd;
}

}  // namespace detail

class FieldElement;

/// The finite field GF(p^m), p^m <= 2^16, in the polynomial basis of the
/// lexicographically least monic irreducible modulus. Immutable; cheap to copy.
class Field {
 public:
    Field() = default;

    static Field make(std::uint32_t p, std::uint32_t m) {
        detail::require(detail::is_prime(p), "field_make: characteristic must be prime");
        detail::require(m >= 1 && m <= 16, "field_make: extension degree must be in [1, 16]");
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < m && size <= kMaxFieldSize; ++i) size *= p;
        detail::require(size <= kMaxFieldSize, "field_make: field size exceeds 2^16");
        Field f;
        f.data_ = detail::build_field(p, m);
        return f;
    }

    /// GF(q) for a prime power q.
    static Field of_order(std::uint64_t q) {
        auto pp = detail::prime_power(q);
        detail::require(pp.has_value(), "field order must be a prime power");
        return make(pp->first, pp->second);
    }

    bool valid() const { return data_ != nullptr; }
    std::uint32_t characteristic() const { return data_->p; }
    std::uint32_t degree() const { return data_->m; }
    std::uint32_t size() const { return data_->size; }
    const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
    Elem primitive() const { return data_->primitive; }
    bool contains(Elem a) const { return a < data_->size; }

    Elem add(Elem a, Elem b) const {
        const auto p = data_->p;
        if (p == 2) return a ^ b;
        if (data_->m == 1) return (a + b) % p;
        Elem r = 0;
        for (std::uint32_t i = 0; i < data_->m; ++i) {
            const auto w = data_->pow_p[i];
            r += ((a / w % p + b / w % p) % p) * w;
        }
        return r;
    }

    Elem neg(Elem a) const {
        const auto p = data_->p;
        if (p == 2) return a;
        if (data_->m == 1) return (p - a) % p;
        Elem r = 0;
        for (std::uint32_t i = 0; i < data_->m; ++i) {
            const auto w = data_->pow_p[i];
            r += ((p - a / w % p) % p) * w;
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        const std::uint32_t order = data_->size - 1;
        return data_->exp[(data_->log[a] + data_->log[b]) % order];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw InvalidArgument("inverse of zero");
        const std::uint32_t order = data_->size - 1;
        return data_->exp[(order - data_->log[a]) % order];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t order = data_->size - 1;
        return data_->exp[(static_cast<std::uint64_t>(data_->log[a]) * (e % order)) % order];
    }

    /// primitive^i.
    Elem exp(std::uint64_t i) const { return data_->exp[i % (data_->size - 1)]; }
    /// Discrete log base the cached primitive element; a must be nonzero.
    std::uint32_t log(Elem a) const {
        if (a == 0) throw InvalidArgument("log of zero");
        return data_->log[a];
    }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const {
        const std::int64_t p = data_->p;
        return static_cast<Elem>(((v % p) + p) % p);
    }

    /// x^(p^times).
    Elem frobenius(Elem x, std::uint32_t times = 1) const {
        Elem r = x;
        for (std::uint32_t i = 0; i < times; ++i) r = pow(r, data_->p);
        return r;
    }

    /// x lies in the subfield GF(p^d), i.e. x^(p^d) = x.
    bool in_subfield(Elem x, std::uint32_t d) const { return frobenius(x, d) == x; }

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(Elem a) const {
        if (a == 0) throw InvalidArgument("order of zero");
        const std::uint64_t order = data_->size - 1;
        return order / std::gcd<std::uint64_t>(order, data_->log[a]);
    }

    std::vector<std::uint32_t> coefficients(Elem a) const {
        return detail::to_digits(a, data_->p, data_->m);
    }

    Elem from_coefficients(std::span<const std::uint32_t> c) const {
        detail::require(c.size() <= data_->m, "too many coefficients for field");
        Elem v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            detail::require(c[i] < data_->p, "coefficient out of range");
            v = v * data_->p + c[i];
        }
        return v;
    }

    /// Bits used by one coefficient in the hex packing.
    std::uint32_t bits_per_digit() const {
        std::uint32_t b = 0;
        while ((1u << b) < data_->p) ++b;
        return b;
    }

    /// Width of one packed element: m coefficients of bits_per_digit() bits.
    std::uint32_t packed_bits() const { return bits_per_digit() * data_->m; }

    std::uint64_t pack(Elem a) const {
        std::uint64_t r = 0;
        const auto b = bits_per_digit();
        auto d = coefficients(a);
        for (std::size_t i = 0; i < d.size(); ++i) r |= static_cast<std::uint64_t>(d[i]) << (b * i);
        return r;
    }

    Elem unpack(std::uint64_t bits) const {
        const auto b = bits_per_digit();
        std::vector<std::uint32_t> d(data_->m);
        for (std::uint32_t i = 0; i < data_->m; ++i) d[i] = static_cast<std::uint32_t>((bits >> (b * i)) & ((1u << b) - 1));
        return from_coefficients(d);
    }

    std::string describe() const {
        return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->m) + ")";
    }

    FieldElement element(Elem v) const;

    friend bool operator==(const Field& a, const Field& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->p == b.data_->p && a.data_->m == b.data_->m && a.data_->modulus == b.data_->modulus;
    }

 private:
    std::shared_ptr<const detail::FieldData> data_;
};

/// An element bound to its field. Mixed-field arithmetic throws ContextMismatch.
class FieldElement {
 public:
    FieldElement(Field f, Elem v) : field_(std::move(f)), value_(v) {
        detail::require(field_.contains(v), "field element out of range");
    }

    const Field& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(value_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(value_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(value_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_.div(value_, check(o))}; }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }
    FieldElement inverse() const { return {field_, field_.inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

 private:
    Elem check(const FieldElement& o) const {
        if (!(field_ == o.field_)) throw ContextMismatch("field mismatch: " + field_.describe() + " vs " + o.field_.describe());
        return o.value_;
    }

    Field field_;
    Elem value_;
};

inline FieldElement Field::element(Elem v) const { return FieldElement(*this, v); }

/// Field operation dispatch: neg and inv ignore b.
enum class FieldOp { add, mul, neg, inv };

inline FieldElement field_arith(FieldOp op, const FieldElement& a, const std::optional<FieldElement>& b = std::nullopt) {
    switch (op) {
        case FieldOp::add:
            detail::require(b.has_value(), "add needs two operands");
            return a + *b;
        case FieldOp::mul:
            detail::require(b.has_value(), "mul needs two operands");
            return a * *b;
        case FieldOp::neg:
            return -a;
        case FieldOp::inv:
            return a.inverse();
    }
    throw InvalidArgument("unknown field operation");
}

/// A field homomorphism GF(p^a) -> GF(p^b), a | b, sending x to the least root
/// of the source modulus in the target.
class FieldEmbedding {
 public:
    FieldEmbedding() = default;

    FieldEmbedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
        if (from_.characteristic() != to_.characteristic() || to_.degree() % from_.degree() != 0)
            throw ContextMismatch("no embedding " + from_.describe() + " -> " + to_.describe());
        const auto& mod = from_.modulus();
        auto eval = [&](const std::vector<std::uint32_t>& coeffs, Elem x) {
            Elem acc = 0;
            for (std::size_t i = coeffs.size(); i-- > 0;) acc = to_.add(to_.mul(acc, x), to_.from_int(coeffs[i]));
            return acc;
        };
        Elem root = to_.size();
        for (Elem x = 0; x < to_.size(); ++x) {
            if (eval(mod, x) == 0) {
                root = x;
                break;
            }
        }
        if (root == to_.size()) throw InternalError("embedding root not found");
        image_.resize(from_.size());
        preimage_.assign(to_.size(), kNone);
        for (Elem a = 0; a < from_.size(); ++a) {
            image_[a] = eval(from_.coefficients(a), root);
            preimage_[image_[a]] = a;
        }
    }

    const Field& from() const { return from_; }
    const Field& to() const { return to_; }
    Elem operator()(Elem a) const { return image_.at(a); }

    std::optional<Elem> preimage(Elem b) const {
        const auto v = preimage_.at(b);
        if (v == kNone) return std::nullopt;
        return v;
    }

 private:
    static constexpr Elem kNone = ~Elem{0};
    Field from_;
    Field to_;
    std::vector<Elem> image_;
    std::vector<Elem> preimage_;
};

/// The field GF(q^E), E = mult_order(q, n), together with an element of
/// multiplicative order exactly n.
struct RootOfUnity {
    Field field;
    Elem omega;
};

inline RootOfUnity root_of_unity(std::uint64_t base_q, std::uint64_t n) {
    auto pp = detail::prime_power(base_q);
    detail::require(pp.has_value(), "root_of_unity: q must be a prime power");
    detail::require(n >= 1, "root_of_unity: n must be positive");
    detail::require(std::gcd(base_q, n) == 1, "root_of_unity: gcd(n, q) must be 1");
    const std::uint64_t e = mult_order(base_q, n);
    const std::uint64_t m = e * pp->second;
    std::uint64_t size = 1;
    for (std::uint64_t i = 0; i < m && size <= kMaxFieldSize; ++i) size *= pp->first;
    if (m > 16 || size > kMaxFieldSize)
        throw GuardExceeded("root_of_unity: splitting field larger than 2^16");
    Field f = Field::make(pp->first, static_cast<std::uint32_t>(m));
    const Elem omega = f.exp((f.size() - 1) / n);
    return {f, omega};
}

}  // namespace permadd
