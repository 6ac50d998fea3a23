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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "permadd/error.hpp"
#include "permadd/gf.hpp"

namespace permadd {

/// Length-n vector over GF(q), packed into 64-bit words: one bit per entry
/// when q = 2, sixteen bits per entry otherwise.
class FqVector {
 public:
    FqVector() = default;

    FqVector(Field field, std::size_t n)
        : field_(std::move(field)), n_(n), width_(field_.size() == 2 ? 1 : 16), words_(word_count(n, width_), 0) {}

    static FqVector from_values(const Field& f, const std::vector<Elem>& values) {
        FqVector v(f, values.size());
        for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i]);
        return v;
    }

    static FqVector unit(const Field& f, std::size_t n, std::size_t i, Elem value = 1) {
        FqVector v(f, n);
        v.set(i, value);
        return v;
    }

    const Field& field() const { return field_; }
    std::size_t size() const { return n_; }
    bool is_binary() const { return width_ == 1; }

    Elem get(std::size_t i) const {
        const std::size_t bit = i * width_;
        return static_cast<Elem>((words_[bit / 64] >> (bit % 64)) & mask());
    }

    void set(std::size_t i, Elem v) {
        detail::require(i < n_, "vector index out of range");
        detail::require(field_.contains(v), "value outside field");
        const std::size_t bit = i * width_;
        auto& w = words_[bit / 64];
        w &= ~(mask() << (bit % 64));
        w |= static_cast<std::uint64_t>(v) << (bit % 64);
    }

    std::vector<Elem> values() const {
        std::vector<Elem> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = get(i);
        return out;
    }

    std::size_t weight() const {
        if (is_binary()) {
            std::size_t w = 0;
            for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
            return w;
        }
        std::size_t w = 0;
        for (std::size_t i = 0; i < n_; ++i) w += get(i) != 0;
        return w;
    }

    bool is_zero() const {
        for (auto x : words_)
            if (x) return false;
        return true;
    }

    /// Sum of the coordinates in GF(q).
    Elem coordinate_sum() const {
        if (is_binary()) return static_cast<Elem>(weight() & 1);
        Elem s = 0;
        for (std::size_t i = 0; i < n_; ++i) s = field_.add(s, get(i));
        return s;
    }

    FqVector& operator+=(const FqVector& o) {
        check(o);
        if (field_.characteristic() == 2) {
            for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        } else {
            for (std::size_t i = 0; i < n_; ++i) set_raw(i, field_.add(get(i), o.get(i)));
        }
        return *this;
    }

    FqVector& operator-=(const FqVector& o) {
        check(o);
        if (field_.characteristic() == 2) return *this += o;
        for (std::size_t i = 0; i < n_; ++i) set_raw(i, field_.sub(get(i), o.get(i)));
        return *this;
    }

    friend FqVector operator+(FqVector a, const FqVector& b) { return a += b; }
    friend FqVector operator-(FqVector a, const FqVector& b) { return a -= b; }

    FqVector operator-() const {
        FqVector r(field_, n_);
        return r -= *this;
    }

    /// this += c * o.
    void add_scaled(const FqVector& o, Elem c) {
        check(o);
        if (c == 0) return;
        if (c == 1) {
            *this += o;
            return;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            const Elem x = o.get(i);
            if (x) set_raw(i, field_.add(get(i), field_.mul(c, x)));
        }
    }

    FqVector scaled(Elem c) const {
        FqVector r(field_, n_);
        r.add_scaled(*this, c);
        return r;
    }

    /// out[image[i]] = (*this)[i].
    FqVector permuted(const std::vector<std::uint32_t>& image) const {
        detail::require(image.size() == n_, "permutation length mismatch");
        FqVector r(field_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const Elem x = get(i);
            if (x) r.set_raw(image[i], x);
        }
        return r;
    }

    /// Cyclic shift towards higher indices: out[(i + s) mod n] = (*this)[i].
    FqVector rotated(std::size_t s) const {
        FqVector r(field_, n_);
        if (n_ == 0) return r;
        s %= n_;
        if (!is_binary() || s == 0) {
            for (std::size_t i = 0; i < n_; ++i) {
                const Elem x = get(i);
                if (x) r.set_raw((i + s) % n_, x);
            }
            return r;
        }
        // (v << s) | (v >> (n - s)) on an n-bit multiword value
        shift_left_into(r.words_, s);
        shift_right_or_into(r.words_, n_ - s);
        r.clear_tail();
        return r;
    }

    /// Vector without its last coordinate.
    FqVector truncated() const {
        detail::require(n_ >= 1, "cannot truncate empty vector");
        FqVector r(field_, n_ - 1);
        for (std::size_t i = 0; i + 1 < n_; ++i) r.set_raw(i, get(i));
        return r;
    }

    /// Vector with one extra coordinate appended.
    FqVector extended(Elem last) const {
        FqVector r(field_, n_ + 1);
        for (std::size_t i = 0; i < n_; ++i) r.set_raw(i, get(i));
        r.set(n_, last);
        return r;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Hex of the packed coefficient stream, little-endian: entry i occupies
    /// bits [i*b, (i+1)*b) of the integer, b = field().packed_bits().
    std::string to_hex() const {
        const std::size_t b = field_.packed_bits();
        const std::size_t total = n_ * b;
        const std::size_t nibbles = std::max<std::size_t>(1, (total + 3) / 4);
        std::vector<std::uint8_t> bits(nibbles * 4, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint64_t packed = field_.pack(get(i));
            for (std::size_t k = 0; k < b; ++k) bits[i * b + k] = static_cast<std::uint8_t>((packed >> k) & 1);
        }
        static constexpr char kDigits[] = "0123456789abcdef";
        std::string s;
        for (std::size_t j = nibbles; j-- > 0;) {
            unsigned v = 0;
            for (std::size_t k = 0; k < 4; ++k) v |= static_cast<unsigned>(bits[j * 4 + k]) << k;
            s.push_back(kDigits[v]);
        }
        return s;
    }

    static FqVector from_hex(const Field& f, std::size_t n, const std::string& hex) {
        const std::size_t b = f.packed_bits();
        std::vector<std::uint8_t> bits(hex.size() * 4, 0);
        for (std::size_t j = 0; j < hex.size(); ++j) {
            const char c = hex[hex.size() - 1 - j];
            unsigned v;
            if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
            else throw InvalidArgument("bad hex digit in '" + hex + "'");
            for (std::size_t k = 0; k < 4; ++k) bits[j * 4 + k] = static_cast<std::uint8_t>((v >> k) & 1);
        }
        for (std::size_t k = n * b; k < bits.size(); ++k)
            if (bits[k]) throw InvalidArgument("hex vector '" + hex + "' longer than " + std::to_string(n) + " entries");
        FqVector v(f, n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t packed = 0;
            for (std::size_t k = 0; k < b; ++k)
                if (i * b + k < bits.size() && bits[i * b + k]) packed |= std::uint64_t{1} << k;
            v.set(i, f.unpack(packed));
        }
        return v;
    }

    friend bool operator==(const FqVector& a, const FqVector& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.words_ == b.words_;
    }

    /// Ordering by (index, value) support lists; used for deterministic ties.
    friend bool support_less(const FqVector& a, const FqVector& b) {
        const std::size_t n = std::min(a.n_, b.n_);
        std::size_t i = 0, j = 0;
        while (true) {
            while (i < n && a.get(i) == 0) ++i;
            while (j < n && b.get(j) == 0) ++j;
            if (i == n || j == n) return i == n && j != n;
            if (i != j) return i < j;
            if (a.get(i) != b.get(j)) return a.get(i) < b.get(j);
            ++i;
            ++j;
        }
    }

 private:
    static std::size_t word_count(std::size_t n, std::size_t width) { return (n * width + 63) / 64; }
    std::uint64_t mask() const { return width_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width_) - 1); }

    void set_raw(std::size_t i, Elem v) {
        const std::size_t bit = i * width_;
        auto& w = words_[bit / 64];
        w &= ~(mask() << (bit % 64));
        w |= static_cast<std::uint64_t>(v) << (bit % 64);
    }

    void check(const FqVector& o) const {
        if (o.n_ != n_) throw InvalidArgument("vector length mismatch");
        if (!(o.field_ == field_)) throw ContextMismatch("vector field mismatch");
    }

    void shift_left_into(std::vector<std::uint64_t>& out, std::size_t s) const {
        const std::size_t ws = s / 64, bs = s % 64;
        for (std::size_t i = out.size(); i-- > ws;) {
            std::uint64_t v = words_[i - ws] << bs;
            if (bs && i - ws >= 1) v |= words_[i - ws - 1] >> (64 - bs);
            out[i] |= v;
        }
    }

    void shift_right_or_into(std::vector<std::uint64_t>& out, std::size_t s) const {
        const std::size_t ws = s / 64, bs = s % 64;
        for (std::size_t i = 0; i + ws < words_.size(); ++i) {
            std::uint64_t v = words_[i + ws] >> bs;
            if (bs && i + ws + 1 < words_.size()) v |= words_[i + ws + 1] << (64 - bs);
            out[i] |= v;
        }
    }

    void clear_tail() {
        const std::size_t used = n_ * width_;
        if (used % 64) words_.back() &= (std::uint64_t{1} << (used % 64)) - 1;
    }

    Field field_;
    std::size_t n_ = 0;
    std::size_t width_ = 1;
    std::vector<std::uint64_t> words_;
};

}  // namespace permadd
