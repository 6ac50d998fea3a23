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
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "permadd/error.hpp"
#include "permadd/fq_vector.hpp"
#include "permadd/gf.hpp"
#include "permadd/linalg.hpp"

namespace permadd {

/// Largest syndrome space for which coset tables are built.
inline constexpr std::uint64_t kMaxSyndromes = std::uint64_t{1} << 24;

/// Linear [n, k] code over GF(q) with generator in reduced row-echelon form
/// and a parity-check matrix spanning the dual. Coset data (syndrome
/// distances and lexicographically least minimum-weight leaders) is built on
/// first use, once, and shared between copies.
class LinearCode {
 public:
    struct Nearest {
        FqVector codeword;
        std::size_t distance;
    };

    LinearCode() = default;

    static LinearCode from_basis(const Field& f, std::size_t n, const std::vector<FqVector>& vectors) {
        for (const auto& v : vectors) {
            if (v.size() != n) throw InvalidArgument("code_from_basis: inconsistent vector lengths");
            if (!(v.field() == f)) throw ContextMismatch("code_from_basis: field mismatch");
        }
        Matrix g = Matrix::from_rows(f, n, vectors);
        rref(g);
        return LinearCode(std::move(g));
    }

    /// The code { x : H x = 0 }.
    static LinearCode from_parity_check(const Matrix& h) { return LinearCode(null_space(h)); }

    const Field& field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    std::size_t redundancy() const { return length() - dimension(); }
    const Matrix& generator() const { return gen_; }
    const Matrix& parity_check() const { return check_; }
    std::vector<FqVector> basis() const { return gen_.row_vectors(); }

    FqVector syndrome(const FqVector& v) const {
        require_length(v);
        return check_ * v;
    }

    bool contains(const FqVector& v) const { return syndrome(v).is_zero(); }

    /// Every codeword of this code lies in other.
    bool subcode_of(const LinearCode& other) const {
        for (const auto& b : basis())
            if (!other.contains(b)) return false;
        return true;
    }

    std::uint64_t syndrome_count() const {
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < redundancy(); ++i) {
            s *= field().size();
            if (s > kMaxSyndromes) throw GuardExceeded("syndrome space q^(n-k) exceeds 2^24");
        }
        return s;
    }

    /// max over cosets of the minimum weight, by breadth-first growth of
    /// Hamming spheres in syndrome space.
    std::size_t covering_radius() const {
        auto& st = state();
        std::call_once(st.dist_once, [&] { build_distances(st); });
        return st.radius;
    }

    /// Minimum-weight error pattern of v's coset; ties go to the pattern whose
    /// (index, value) support list is lexicographically least.
    FqVector coset_leader(const FqVector& v) const {
        auto& st = state();
        std::call_once(st.leader_once, [&] { build_leaders(st); });
        const std::uint64_t s = syndrome_index(syndrome(v));
        return leader_of(st, s);
    }

    Nearest nearest_codeword(const FqVector& v) const {
        FqVector e = coset_leader(v);
        const std::size_t d = e.weight();
        return {v - e, d};
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
    struct State {
        std::once_flag dist_once;
        std::once_flag leader_once;
        std::size_t radius = 0;
        std::vector<std::uint32_t> parent;
        std::vector<std::uint32_t> step_pos;
        std::vector<Elem> step_val;
        std::vector<std::uint8_t> level;
    };

    explicit LinearCode(Matrix gen) : gen_(std::move(gen)), check_(null_space(gen_)), state_(std::make_shared<State>()) {
        // dual basis rows in RREF keep the syndrome map canonical
        rref(check_);
        if (check_.rows() == 0) check_ = Matrix(gen_.field(), 0, gen_.cols());
    }

    State& state() const {
        if (!state_) throw InvalidArgument("empty code");
        return *state_;
    }

    void require_length(const FqVector& v) const {
        if (v.size() != length()) throw InvalidArgument("vector length does not match code length");
        if (!(v.field() == field())) throw ContextMismatch("vector field does not match code field");
    }

    std::uint64_t syndrome_index(const FqVector& s) const {
        std::uint64_t idx = 0;
        for (std::size_t i = s.size(); i-- > 0;) idx = idx * field().size() + s.get(i);
        return idx;
    }

    std::uint64_t syndrome_add(std::uint64_t a, std::uint64_t b) const {
        const Field& f = field();
        if (f.characteristic() == 2) return a ^ b;  // base-q digits with q = 2^a
        std::uint64_t r = 0, w = 1;
        const std::uint64_t q = f.size();
        for (std::size_t i = 0; i < redundancy(); ++i) {
            r += f.add(static_cast<Elem>(a % q), static_cast<Elem>(b % q)) * w;
            a /= q;
            b /= q;
            w *= q;
        }
        return r;
    }

    /// steps[j][c-1] = syndrome index of c * e_j.
    std::vector<std::vector<std::uint64_t>> column_steps() const {
        const Field& f = field();
        std::vector<std::vector<std::uint64_t>> steps(length());
        for (std::size_t j = 0; j < length(); ++j)
            for (Elem c = 1; c < f.size(); ++c) steps[j].push_back(syndrome_index(check_ * FqVector::unit(f, length(), j, c)));
        return steps;
    }

    void build_distances(State& st) const {
        const std::uint64_t count = syndrome_count();
        const auto steps = column_steps();
        std::vector<std::uint8_t> dist(count, 0xFF);
        std::vector<std::uint64_t> frontier{0};
        dist[0] = 0;
        std::size_t radius = 0;
        std::uint64_t seen = 1;
        while (!frontier.empty() && seen < count) {
            std::vector<std::uint64_t> next;
            for (auto s : frontier)
                for (const auto& col : steps)
                    for (auto c : col) {
                        const auto t = syndrome_add(s, c);
                        if (dist[t] == 0xFF) {
                            dist[t] = static_cast<std::uint8_t>(radius + 1);
                            next.push_back(t);
                            ++seen;
                        }
                    }
            if (!next.empty()) ++radius;
            frontier = std::move(next);
        }
        if (seen != count) throw InternalError("syndrome space not covered");
        st.radius = radius;
    }

    FqVector leader_of(const State& st, std::uint64_t s) const {
        FqVector e(field(), length());
        while (s != 0) {
            e.set(st.step_pos[s], st.step_val[s]);
            s = st.parent[s];
        }
        return e;
    }

    void build_leaders(State& st) const {
        const std::uint64_t count = syndrome_count();
        const auto steps = column_steps();
        constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
        st.parent.assign(count, kUnset);
        st.step_pos.assign(count, 0);
        st.step_val.assign(count, 0);
        st.level.assign(count, 0xFF);
        std::vector<std::uint32_t> last_pos(count, 0);
        st.level[0] = 0;
        st.parent[0] = 0;
        std::vector<std::uint64_t> frontier{0};
        std::uint8_t lvl = 0;
        while (!frontier.empty()) {
            std::vector<std::uint64_t> next;
            for (auto s : frontier) {
                // a least leader of weight w+1 extends a least leader of weight w
                // by a coordinate beyond its last support position
                const std::size_t first = s == 0 ? 0 : last_pos[s] + 1;
                for (std::size_t j = first; j < length(); ++j)
                    for (Elem c = 1; c < field().size(); ++c) {
                        const auto t = syndrome_add(s, steps[j][c - 1]);
                        if (st.level[t] != 0xFF && st.level[t] <= lvl) continue;
                        if (st.level[t] == 0xFF) {
                            st.level[t] = static_cast<std::uint8_t>(lvl + 1);
                            next.push_back(t);
                        } else {
                            FqVector cand = leader_of(st, s);
                            cand.set(j, c);
                            if (!support_less(cand, leader_of(st, t))) continue;
                        }
                        st.parent[t] = static_cast<std::uint32_t>(s);
                        st.step_pos[t] = static_cast<std::uint32_t>(j);
                        st.step_val[t] = c;
                        last_pos[t] = static_cast<std::uint32_t>(j);
                    }
            }
            frontier = std::move(next);
            ++lvl;
        }
    }

    Matrix gen_;
    Matrix check_;
    std::shared_ptr<State> state_;
};

inline LinearCode code_from_basis(const Field& f, std::size_t n, const std::vector<FqVector>& vectors) {
    return LinearCode::from_basis(f, n, vectors);
}

inline std::size_t covering_radius(const LinearCode& c) { return c.covering_radius(); }
inline LinearCode::Nearest nearest_codeword(const LinearCode& c, const FqVector& v) { return c.nearest_codeword(v); }
inline bool contains(const LinearCode& c, const FqVector& v) { return c.contains(v); }

}  // namespace permadd
