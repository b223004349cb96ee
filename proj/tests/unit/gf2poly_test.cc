// Copyright 2026 The stabopt Authors
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

#include "stabopt/gf2poly.h"

#include <gtest/gtest.h>

#include <random>

namespace stabopt {
namespace {

BinaryPoly P(const char *bits) { return BinaryPoly::from_bitstring(bits); }

TEST(BinaryPoly, DegreeAndBitstrings) {
    EXPECT_EQ(BinaryPoly().degree(), BinaryPoly::kZeroDegree);
    EXPECT_EQ(P("11010").degree(), 3);
    EXPECT_EQ(P("11010").to_bitstring(), "1101");
    EXPECT_EQ(P("11010").to_bitstring(5), "11010");
    EXPECT_EQ(BinaryPoly().to_bitstring(), "0");
    EXPECT_EQ(P("1101"), BinaryPoly(0b1011));
    EXPECT_THROW(BinaryPoly::from_bitstring("10a"), std::invalid_argument);
}

TEST(BinaryPoly, MulModExamples) {
    BinaryPoly m = BinaryPoly::xn_minus_1(5);
    EXPECT_EQ(poly_mul_mod(P("11"), P("11"), m), P("101"));
    EXPECT_EQ(poly_mul_mod(P("01"), P("00001"), m), BinaryPoly::one());
    EXPECT_EQ(poly_mul_mod(P("11"), P("1111"), m), P("10001"));
    EXPECT_THROW(poly_mul_mod(P("11"), P("11"), BinaryPoly()), std::invalid_argument);
}

TEST(BinaryPoly, DivisionIdentityHoldsOnRandomPairs) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; t++) {
        BinaryPoly a(rng() & 0xFFFFFF);
        BinaryPoly b(rng() & 0xFFF);
        if (b.is_zero()) {
            continue;
        }
        auto d = poly_divmod(a, b);
        EXPECT_EQ(d.quotient * b + d.remainder, a);
        EXPECT_LT(d.remainder.degree(), b.degree());
    }
    EXPECT_THROW(poly_divmod(P("1"), BinaryPoly()), std::invalid_argument);
}

TEST(BinaryPoly, ReciprocalExamples) {
    EXPECT_EQ(poly_reciprocal(BinaryPoly::one(), 7), BinaryPoly::one());
    EXPECT_EQ(poly_reciprocal(P("01"), 5), P("00001"));
    EXPECT_EQ(poly_reciprocal(P("1101"), 7), P("1000101"));
    EXPECT_THROW(poly_reciprocal(P("000001"), 5), std::invalid_argument);
}

TEST(BinaryPoly, ReciprocalIsAnInvolution) {
    for (int n = 1; n <= 12; n++) {
        for (std::uint64_t bits = 0; bits < (1u << n); bits++) {
            BinaryPoly a(bits);
            ASSERT_EQ(poly_reciprocal(poly_reciprocal(a, n), n), a) << n << " " << bits;
        }
    }
}

TEST(BinaryPoly, CyclicShiftRotates) {
    EXPECT_EQ(poly_cyclic_shift(P("11001"), 1, 5), P("11100"));
    EXPECT_EQ(poly_cyclic_shift(P("11001"), 5, 5), P("11001"));
}

TEST(Factorization, SmallExamples) {
    auto f1 = factors_of_xn_minus_1(1);
    EXPECT_EQ(f1, (std::vector<BinaryPoly>{P("1"), P("11")}));
    auto f3 = factors_of_xn_minus_1(3);
    EXPECT_EQ(f3, (std::vector<BinaryPoly>{P("1"), P("11"), P("111"), P("1001")}));
    EXPECT_EQ(factors_of_xn_minus_1(7).size(), 8u);
    auto irr = factor_xn_minus_1(7);
    ASSERT_EQ(irr.size(), 3u);
    EXPECT_EQ(irr[0].factor, P("11"));
    EXPECT_EQ(irr[1].factor, P("1101"));
    EXPECT_EQ(irr[2].factor, P("1011"));
    EXPECT_THROW(factors_of_xn_minus_1(0), std::invalid_argument);
}

TEST(Factorization, CyclotomicCosets) {
    auto c = cyclotomic_cosets(7);
    EXPECT_EQ(c, (std::vector<std::vector<int>>{{0}, {1, 2, 4}, {3, 5, 6}}));
    EXPECT_EQ(cyclotomic_cosets(9).size(), 3u);
}

bool irreducible_by_trial_division(BinaryPoly f) {
    for (std::uint64_t d = 2; d < (std::uint64_t{1} << (f.degree() / 2 + 1)); d++) {
        if (poly_divides(BinaryPoly(d), f)) {
            return false;
        }
    }
    return true;
}

class FactorizationByLength : public ::testing::TestWithParam<int> {};

TEST_P(FactorizationByLength, ProductOfIrreduciblesIsXnPlusOne) {
    int n = GetParam();
    BinaryPoly product = BinaryPoly::one();
    for (const auto &f : factor_xn_minus_1(n)) {
        EXPECT_TRUE(irreducible_by_trial_division(f.factor)) << f.factor.to_bitstring();
        for (int i = 0; i < f.multiplicity; i++) {
            product = product * f.factor;
        }
    }
    EXPECT_EQ(product, BinaryPoly::xn_minus_1(n));
}

TEST_P(FactorizationByLength, DivisorsMatchBruteForce) {
    int n = GetParam();
    BinaryPoly xn = BinaryPoly::xn_minus_1(n);
    std::vector<BinaryPoly> brute;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n + 1)); bits++) {
        if (poly_divides(BinaryPoly(bits), xn)) {
            brute.push_back(BinaryPoly(bits));
        }
    }
    auto got = factors_of_xn_minus_1(n);
    std::size_t expected = 1;
    for (const auto &f : factor_xn_minus_1(n)) {
        expected *= static_cast<std::size_t>(f.multiplicity + 1);
    }
    EXPECT_EQ(got.size(), expected);
    EXPECT_EQ(got.size(), brute.size());
    std::sort(brute.begin(), brute.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, brute);
    for (auto f : got) {
        EXPECT_TRUE(poly_divmod(xn, f).remainder.is_zero());
    }
}

INSTANTIATE_TEST_SUITE_P(Lengths, FactorizationByLength, ::testing::Range(1, 17));

}  // namespace
}  // namespace stabopt
