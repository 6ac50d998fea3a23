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

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace permadd;

namespace {

const Field kF2 = Field::make(2, 1);

std::shared_ptr<const Decomposition> c15() {
    static auto d = decompose(Group::parse("C15"), 2);
    return d;
}

LinearCode cyclic_code(std::size_t n, const std::vector<std::size_t>& gen) {
    const std::size_t deg = *std::max_element(gen.begin(), gen.end());
    std::vector<FqVector> rows;
    for (std::size_t s = 0; s + deg < n; ++s) {
        FqVector v(kF2, n);
        for (auto e : gen) v.set(e + s, 1);
        rows.push_back(v);
    }
    return code_from_basis(kF2, n, rows);
}

/// Class index (1-based) of the component containing group element g.
std::size_t class_of(const Decomposition& d, std::size_t g) {
    for (std::size_t k = 1; k <= d.size(); ++k) {
        const auto& m = d.component(k).cls.members;
        if (std::find(m.begin(), m.end(), g) != m.end()) return k;
    }
    return 0;
}

std::vector<std::vector<std::size_t>> all_supports(std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < t; ++k)
            if (mask >> k & 1) s.push_back(k + 1);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(IdealFromT, RatesAndDimensions) {
    EXPECT_EQ(code_rate(ideal_from_T(c15(), {2, 3, 4})).str(), "12/15");
    EXPECT_EQ(code_rate(ideal_from_T(c15(), {2, 3})).str(), "8/15");
    EXPECT_EQ(code_rate(ideal_from_T(c15(), {2})).str(), "4/15");
    EXPECT_EQ(ideal_from_T(c15(), {}).dimension(), 0u);
    EXPECT_THROW(ideal_from_T(c15(), {6}), InvalidArgument);
    EXPECT_THROW(ideal_from_T(c15(), {0}), InvalidArgument);
}

TEST(IdealFromT, IsAnIdealOfExpectedDimension) {
    for (auto [s, q] : std::vector<std::pair<const char*, std::uint64_t>>{{"C15", 2}, {"C3xC3", 2}, {"C7", 2}, {"C5", 3}}) {
        auto d = decompose(Group::parse(s), q);
        for (const auto& t : all_supports(d->size())) {
            const GroupCode m = ideal_from_T(d, t);
            std::size_t dim = 0;
            for (auto k : t) dim += d->component(k).exponent;
            EXPECT_EQ(m.dimension(), dim);
            for (const auto& b : m.basis())
                for (std::size_t g = 0; g < d->group().order(); ++g)
                    EXPECT_TRUE(m.contains(AlgebraElement::monomial(d->group(), d->base_field(), g) * b));
        }
    }
}

TEST(Annihilator, KnownCodes) {
    EXPECT_EQ(ideal_from_T(c15(), {2}).annihilator_code(), cyclic_code(15, {0, 1, 4}));
    EXPECT_EQ(ideal_from_T(c15(), {2, 3}).annihilator_code(), cyclic_code(15, {0, 4, 6, 7, 8}));
    const GroupCode m1 = ideal_from_T(c15(), {2, 3, 4});
    EXPECT_EQ(m1.annihilator_code(), cyclic_code(15, {0, 3, 6, 9, 12}));
    EXPECT_TRUE(m1.annihilates(AlgebraElement(Group::parse("C15"), FqVector::from_values(kF2, {1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}))));
}

TEST(Annihilator, C3xC3MatchesDisplayedParityCheck) {
    auto d = decompose(Group::parse("C3xC3"), 2);
    const Group& g = d->group();
    const std::size_t cy = class_of(*d, g.index({0, 1})), cx = class_of(*d, g.index({1, 0}));
    const GroupCode m = ideal_from_T(d, {cy, cx});
    EXPECT_EQ(code_rate(m).str(), "4/9");
    EXPECT_EQ(degree_bound(m), 2u);
    const std::vector<std::vector<Elem>> h{{1, 1, 1, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 1, 0, 1, 1}};
    std::vector<FqVector> rows;
    for (const auto& r : h) rows.push_back(FqVector::from_values(kF2, r));
    EXPECT_TRUE(same_row_space(m.annihilator_code().generator(), null_space(Matrix::from_rows(kF2, 9, rows))));
}

TEST(Annihilator, KernelAndComplementAgreeExhaustively) {
    for (auto [s, q] : std::vector<std::pair<const char*, std::uint64_t>>{{"C15", 2}, {"C7", 2}, {"C3xC3", 2}, {"C5", 3}}) {
        auto d = decompose(Group::parse(s), q);
        for (const auto& t : all_supports(d->size())) {
            const GroupCode m = ideal_from_T(d, t);
            // kernel method on generators only, no spectral data
            const GroupCode plain = ideal_from_generators(d->group(), d->base_field(), m.basis());
            EXPECT_EQ(plain.annihilator_code(), m.annihilator_code());
            EXPECT_EQ(annihilator(m).code(), m.annihilator_code());
            EXPECT_EQ(annihilator(plain).code(), m.annihilator_code());
            for (const auto& r : m.annihilator_basis())
                for (const auto& b : m.basis()) EXPECT_TRUE((r * b).is_zero());
        }
    }
}

TEST(Annihilator, ZeroIdealAndWholeAlgebra) {
    const GroupCode zero = ideal_from_T(c15(), {});
    EXPECT_EQ(zero.annihilator_code().dimension(), 15u);
    const GroupCode whole = ideal_from_T(c15(), {1, 2, 3, 4, 5});
    EXPECT_EQ(whole.annihilator_code().dimension(), 0u);
}

TEST(DegreeBound, Examples) {
    EXPECT_EQ(degree_bound(ideal_from_T(c15(), {2, 3, 4})), 6u);
    EXPECT_EQ(degree_bound(ideal_from_T(c15(), {2, 3})), 3u);
    EXPECT_EQ(degree_bound(ideal_from_T(c15(), {2})), 1u);
}

TEST(DegreeBound, NestedChain) {
    const std::size_t d3 = degree_bound(ideal_from_T(c15(), {2})), d2 = degree_bound(ideal_from_T(c15(), {2, 3})),
                      d1 = degree_bound(ideal_from_T(c15(), {2, 3, 4}));
    EXPECT_LE(d3, d2);
    EXPECT_LE(d2, d1);
}

TEST(DegreeBound, EqualsExhaustiveScanForAllIdeals) {
    for (const char* s : {"C15", "C7", "C3xC3", "C5", "C9"}) {
        auto d = decompose(Group::parse(s), 2);
        for (const auto& t : all_supports(d->size())) {
            const GroupCode m = ideal_from_T(d, t);
            EXPECT_EQ(degree_bound(m), oracle::covering_radius_binary(m.annihilator_code())) << s;
        }
    }
}

TEST(DegreeReduce, PreservesActionAndMeetsBound) {
    std::mt19937_64 rng(21);
    for (const auto& t : std::vector<std::vector<std::size_t>>{{2, 3, 4}, {2, 3}, {2}}) {
        const GroupCode m = ideal_from_T(c15(), t);
        for (int i = 0; i < 200; ++i) {
            const auto k = oracle::random_element(m.group(), kF2, rng);
            const auto r = degree_reduce(m, k);
            EXPECT_LE(r.weight(), degree_bound(m));
            EXPECT_TRUE(m.annihilates(k - r));
            const FqVector v = oracle::random_codeword(m.code(), rng);
            EXPECT_EQ(apply(k, v), apply(r, v));
            EXPECT_EQ(degree_reduce(m, r), r);
        }
    }
}

TEST(DegreeReduce, Examples) {
    const GroupCode m2 = ideal_from_T(c15(), {2, 3});
    EXPECT_LE(degree_reduce(m2, AlgebraElement::all_ones(m2.group(), kF2)).weight(), 3u);
    const GroupCode m3 = ideal_from_T(c15(), {2});
    const auto y = AlgebraElement::monomial(m3.group(), kF2, 1);
    EXPECT_EQ(degree_reduce(m3, y), y);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) EXPECT_LE(degree_reduce(m3, oracle::random_element(m3.group(), kF2, rng)).weight(), 1u);
    EXPECT_THROW(degree_reduce(m3, AlgebraElement::one(Group::parse("C7"), kF2)), ContextMismatch);
}

TEST(EvenWeight, Examples) {
    for (const auto& t : std::vector<std::vector<std::size_t>>{{2, 3, 4}, {2, 3}, {2}, {}}) EXPECT_TRUE(is_even_weight_ideal(ideal_from_T(c15(), t)));
    EXPECT_FALSE(is_even_weight_ideal(ideal_from_T(c15(), {1, 2, 3, 4, 5})));
    for (const auto& t : all_supports(5)) {
        const bool has_one = !t.empty() && t.front() == 1;
        EXPECT_EQ(is_even_weight_ideal(ideal_from_T(c15(), t)), !has_one);
    }
    EXPECT_THROW(is_even_weight_ideal(ideal_from_T(decompose(Group::parse("C5"), 3), {2})), InvalidArgument);
}

TEST(OddLength, NonTrivialSupportBoundsDegree) {
    for (std::uint32_t n : {7u, 9u, 15u}) {
        auto d = decompose(Group::make({n}), 2);
        std::vector<std::size_t> t;
        for (std::size_t k = 2; k <= d->size(); ++k) t.push_back(k);
        EXPECT_LE(degree_bound(ideal_from_T(d, t)), (n - 1) / 2) << n;
    }
}

TEST(Generators, PrincipalIdeal) {
    const Group g = Group::parse("C7");
    // 1 + y generates the even-weight ideal
    const GroupCode m = ideal_from_generators(g, kF2, {AlgebraElement::one(g, kF2) + AlgebraElement::monomial(g, kF2, 1)});
    EXPECT_EQ(m.dimension(), 6u);
    EXPECT_FALSE(m.support().has_value());
    EXPECT_TRUE(is_even_weight_ideal(m));
    EXPECT_EQ(degree_bound(m), 3u);
}
