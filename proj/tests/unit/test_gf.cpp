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

#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace permadd;

TEST(Field, MakeRejectsBadParameters) {
    EXPECT_THROW(Field::make(4, 1), InvalidArgument);
    EXPECT_THROW(Field::make(2, 0), InvalidArgument);
    EXPECT_THROW(Field::make(2, 17), InvalidArgument);
    EXPECT_THROW(Field::make(3, 11), InvalidArgument);
    EXPECT_THROW(Field::of_order(6), InvalidArgument);
}

TEST(Field, PrimeFieldGF2) {
    const Field f = Field::make(2, 1);
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f.add(1, 1), 0u);
    EXPECT_EQ(f.describe(), "GF(2^1)");
}

TEST(Field, GF4AlphaSquared) {
    const Field f = Field::make(2, 2);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    // alpha = x encodes as 2, alpha + 1 as 3
    EXPECT_EQ(f.mul(2, 2), 3u);
}

TEST(Field, GF16AlphaOrder) {
    const Field f = Field::make(2, 4);
    EXPECT_EQ(f.pow(2, 15), 1u);
    EXPECT_EQ(f.element_order(f.primitive()), 15u);
}

TEST(Field, MultiplicationMatchesPolynomialOracle) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 1}, {3, 3}}) {
        const Field f = Field::make(p, m);
        for (Elem a = 0; a < f.size(); ++a)
            for (Elem b = 0; b < f.size(); ++b) ASSERT_EQ(f.mul(a, b), oracle::poly_mul(f, a, b)) << f.describe() << " " << a << "*" << b;
    }
}

TEST(Field, AxiomsExhaustiveSmallFields) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        const Field f = Field::make(p, m);
        for (Elem a = 0; a < f.size(); ++a) {
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            if (a) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            }
            for (Elem b = 0; b < f.size(); ++b) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
                for (Elem c = 0; c < f.size(); ++c) {
                    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }
}

TEST(Field, PrimitiveHasFullOrder) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 8}, {3, 4}, {2, 16}, {251, 1}}) {
        const Field f = Field::make(p, m);
        EXPECT_EQ(f.element_order(f.primitive()), f.size() - 1);
    }
}

TEST(Field, InverseOfZeroThrows) {
    const Field f = Field::make(2, 4);
    EXPECT_THROW(f.inv(0), InvalidArgument);
    EXPECT_THROW(field_arith(FieldOp::inv, f.element(0)), InvalidArgument);
}

TEST(FieldElement, MismatchedFieldsThrow) {
    const Field a = Field::make(2, 2), b = Field::make(2, 3);
    EXPECT_THROW(a.element(1) + b.element(1), ContextMismatch);
    EXPECT_EQ((a.element(2) * a.element(2)).value(), 3u);
    EXPECT_EQ(field_arith(FieldOp::add, a.element(1), a.element(1)).value(), 0u);
}

TEST(Field, FrobeniusAndSubfields) {
    const Field f = Field::make(2, 4);
    std::size_t in2 = 0, in1 = 0;
    for (Elem x = 0; x < f.size(); ++x) {
        EXPECT_EQ(f.frobenius(x), f.mul(x, x));
        in2 += f.in_subfield(x, 2);
        in1 += f.in_subfield(x, 1);
    }
    EXPECT_EQ(in2, 4u);
    EXPECT_EQ(in1, 2u);
}

TEST(FieldEmbedding, IsRingHomomorphism) {
    const Field small = Field::make(2, 2), big = Field::make(2, 4);
    const FieldEmbedding e(small, big);
    for (Elem a = 0; a < small.size(); ++a) {
        EXPECT_EQ(e.preimage(e(a)), a);
        for (Elem b = 0; b < small.size(); ++b) {
            EXPECT_EQ(e(small.add(a, b)), big.add(e(a), e(b)));
            EXPECT_EQ(e(small.mul(a, b)), big.mul(e(a), e(b)));
        }
    }
    EXPECT_THROW(FieldEmbedding(Field::make(2, 3), big), ContextMismatch);
}

TEST(MultOrder, Examples) {
    EXPECT_EQ(mult_order(2, 15), 4u);
    EXPECT_EQ(mult_order(2, 7), 3u);
    EXPECT_EQ(mult_order(2, 1), 1u);
    EXPECT_THROW(mult_order(2, 6), InvalidArgument);
    for (std::uint64_t n : {3, 5, 9, 11, 21}) {
        std::uint64_t l = 1, x = 2 % n;
        while (x != 1) {
            x = x * 2 % n;
            ++l;
        }
        EXPECT_EQ(mult_order(2, n), l) << n;
    }
}

TEST(EulerTotient, AgreesWithGcdCount) {
    EXPECT_EQ(euler_totient(15), 8u);
    EXPECT_EQ(euler_totient(7), 6u);
    EXPECT_EQ(euler_totient(1), 1u);
    for (std::uint64_t n = 2; n < 200; ++n) {
        std::uint64_t c = 0;
        for (std::uint64_t j = 1; j < n; ++j) c += std::gcd(j, n) == 1;
        EXPECT_EQ(euler_totient(n), c) << n;
    }
}

TEST(RootOfUnity, OrderExactlyN) {
    auto r = root_of_unity(2, 1);
    EXPECT_EQ(r.field.size(), 2u);
    EXPECT_EQ(r.omega, 1u);
    for (std::uint64_t n : {3, 5, 7, 9, 15, 17}) {
        auto u = root_of_unity(2, n);
        EXPECT_EQ(u.field.degree(), mult_order(2, n));
        EXPECT_EQ(u.field.element_order(u.omega), n);
    }
    auto t = root_of_unity(3, 5);
    EXPECT_EQ(t.field.size(), 81u);
    EXPECT_EQ(t.field.element_order(t.omega), 5u);
    EXPECT_THROW(root_of_unity(2, 6), InvalidArgument);
    EXPECT_THROW(root_of_unity(2, 19), GuardExceeded);
}
