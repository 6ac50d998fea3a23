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

AlgebraElement elem(const Group& g, const Field& f, std::vector<Elem> c) { return {g, FqVector::from_values(f, c)}; }

}  // namespace

TEST(AlgebraElement, C3HandConvolution) {
    const Group g = Group::parse("C3");
    const auto a = elem(g, kF2, {1, 1, 0});
    const auto b = elem(g, kF2, {0, 1, 0});
    EXPECT_EQ(alg_mul(a, b), elem(g, kF2, {0, 1, 1}));
    EXPECT_EQ(a * AlgebraElement::one(g, kF2), a);
}

TEST(AlgebraElement, RingLawsExhaustiveF2C3) {
    const Group g = Group::parse("C3");
    std::vector<AlgebraElement> all;
    for (Elem m = 0; m < 8; ++m) all.push_back(elem(g, kF2, {m & 1, m >> 1 & 1, m >> 2 & 1}));
    for (const auto& a : all)
        for (const auto& b : all) {
            EXPECT_EQ(a * b, b * a);
            for (const auto& c : all) {
                EXPECT_EQ(a * (b * c), (a * b) * c);
                EXPECT_EQ(a * (b + c), a * b + a * c);
            }
        }
}

TEST(AlgebraElement, RingLawsRandomGF5C3xC2) {
    const Group g = Group::parse("C3xC2");
    const Field f = Field::make(5, 1);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto a = oracle::random_element(g, f, rng), b = oracle::random_element(g, f, rng), c = oracle::random_element(g, f, rng);
        EXPECT_EQ(a * (b * c), (a * b) * c);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - a).weight(), 0u);
    }
}

TEST(AlgebraElement, Weight) {
    const Group g = Group::parse("C15");
    EXPECT_EQ(weight(AlgebraElement(g, kF2)), 0u);
    auto a = AlgebraElement::one(g, kF2) + AlgebraElement::monomial(g, kF2, 3);
    EXPECT_EQ(weight(a), 2u);
    EXPECT_EQ(weight(AlgebraElement::all_ones(g, kF2)), 15u);
}

TEST(AlgebraElement, ContextMismatch) {
    const Group a = Group::parse("C3"), b = Group::parse("C5");
    EXPECT_THROW(AlgebraElement::one(a, kF2) + AlgebraElement::one(b, kF2), ContextMismatch);
    EXPECT_THROW(AlgebraElement::one(a, kF2) * AlgebraElement::one(a, Field::make(2, 2)), ContextMismatch);
    EXPECT_THROW(AlgebraElement(a, FqVector(kF2, 4)), InvalidArgument);
}

TEST(MatrixRep, IdentityAndRegularPermutation) {
    const Group g = Group::parse("C3");
    EXPECT_EQ(matrix_rep(AlgebraElement::one(g, kF2)), Matrix::identity(kF2, 3));
    // rho_gamma has a one in row k, column h exactly when k = gamma h
    const Matrix m = matrix_rep(AlgebraElement::monomial(g, kF2, 1));
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t h = 0; h < 3; ++h) EXPECT_EQ(m(k, h), k == (h + 1) % 3 ? 1u : 0u);
}

TEST(Apply, MonomialIsPermutation) {
    const Group g = Group::parse("C15");
    const auto v = FqVector::unit(kF2, 15, 3);
    EXPECT_EQ(apply(AlgebraElement::monomial(g, kF2, 2), v), FqVector::unit(kF2, 15, 5));
    EXPECT_EQ(apply(AlgebraElement::one(g, kF2), v), v);
}

TEST(Apply, MatchesDenseMatrixAndConvolution) {
    std::mt19937_64 rng(11);
    for (auto [s, q] : std::vector<std::pair<const char*, std::uint64_t>>{{"C15", 2}, {"C3xC3", 2}, {"C7", 4}, {"C5", 3}, {"C2xC4", 3}, {"C65", 2}}) {
        const Group g = Group::parse(s);
        const Field f = Field::of_order(q);
        for (int t = 0; t < 100; ++t) {
            auto k = oracle::random_element(g, f, rng);
            auto m = oracle::random_element(g, f, rng);
            const auto via_apply = apply(k, tau_nat(m));
            EXPECT_EQ(via_apply, oracle::dense_apply(k, tau_nat(m))) << s;
            EXPECT_EQ(via_apply, tau_nat(k * m)) << s;
        }
    }
}

TEST(Apply, LinearInVector) {
    const Group g = Group::parse("C15");
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto k = oracle::random_element(g, kF2, rng);
        auto a = oracle::random_vector(kF2, 15, rng), b = oracle::random_vector(kF2, 15, rng);
        EXPECT_EQ(apply(k, a + b), apply(k, a) + apply(k, b));
    }
    EXPECT_THROW(apply(AlgebraElement::one(g, kF2), FqVector(kF2, 14)), InvalidArgument);
}

TEST(Tau, RoundTrip) {
    const Group g = Group::parse("C3xC3");
    std::mt19937_64 rng(5);
    auto a = oracle::random_element(g, kF2, rng);
    EXPECT_EQ(tau_inv(g, tau_nat(a)), a);
}

TEST(BitTruncation, RoundTripOnEvenVectors) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto v = oracle::random_vector(kF2, 15, rng);
        if (v.weight() % 2) v.set(0, v.get(0) ^ 1);
        const auto w = bit_truncate(v);
        EXPECT_EQ(w.size(), 14u);
        EXPECT_EQ(bit_expand(w), v);
    }
    EXPECT_THROW(bit_truncate(FqVector::unit(kF2, 15, 2)), InvalidArgument);
    const Field f3 = Field::make(3, 1);
    auto v = FqVector::from_values(f3, {1, 1, 1});
    EXPECT_EQ(bit_expand(bit_truncate(v)), v);
}
