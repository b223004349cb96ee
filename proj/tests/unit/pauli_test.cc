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

#include "stabopt/pauli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.h"

namespace stabopt {
namespace {

PauliVector V(const char *s) { return PauliVector::from_string(s); }

Stabilizer steane() {
    return Stabilizer::parse("XIXIXIX,IXXIIXX,IIIXXXX,ZIZIZIZ,IZZIIZZ,IIIZZZZ");
}

PauliVector random_pauli(std::mt19937_64 &rng, int n) {
    return PauliVector::from_key(static_cast<Gf2Word>(rng()) & key_mask(n), n);
}

TEST(PauliVector, ParsesAndPrints) {
    auto p = V("XZIZXIY");
    EXPECT_EQ(p.str(), "XZIZXIY");
    EXPECT_EQ(p.weight(), 5);
    EXPECT_EQ(p.at(6), 'Y');
    Composition c = p.composition();
    EXPECT_EQ(c, (Composition{2, 2, 1, 2}));
    EXPECT_EQ(c.identity + c.x + c.y + c.z, 7);
    EXPECT_THROW(V("XQ"), std::invalid_argument);
    EXPECT_THROW(V(""), std::invalid_argument);
    EXPECT_EQ((V("XZY") * V("ZZI")).str(), "YIY");
}

TEST(PauliVector, SymplecticProductExamples) {
    EXPECT_EQ(symplectic_product(V("XII"), V("XII")), 0);
    EXPECT_EQ(symplectic_product(V("XII"), V("ZII")), 1);
    EXPECT_EQ(symplectic_product(V("XZIZXII"), V("IXZIZXI")), 0);
    EXPECT_THROW(symplectic_product(V("XI"), V("XII")), std::invalid_argument);
}

TEST(PauliVector, SymplecticProductIsSymmetricAndBilinear) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 5000; t++) {
        int n = 1 + static_cast<int>(rng() % 16);
        auto a = random_pauli(rng, n);
        auto b = random_pauli(rng, n);
        auto c = random_pauli(rng, n);
        ASSERT_EQ(symplectic_product(a, b), symplectic_product(b, a));
        ASSERT_EQ(symplectic_product(a * b, c), symplectic_product(a, c) ^ symplectic_product(b, c));
        ASSERT_EQ(symplectic_product(a, b), oracle::commutator(a, b));
    }
}

TEST(Gf4, ArithmeticAndTrace) {
    EXPECT_EQ(gf4_mul(Gf4::kOmega, Gf4::kOmega), Gf4::kOmegaBar);
    EXPECT_EQ(gf4_mul(Gf4::kOmega, Gf4::kOmegaBar), Gf4::kOne);
    EXPECT_EQ(gf4_add(Gf4::kOne, Gf4::kOmega), Gf4::kOmegaBar);
    EXPECT_EQ(gf4_conj(Gf4::kOmega), Gf4::kOmegaBar);
    EXPECT_EQ(gf4_trace(Gf4::kZero), 0);
    EXPECT_EQ(gf4_trace(Gf4::kOne), 0);
    EXPECT_EQ(gf4_trace(Gf4::kOmega), 1);
    EXPECT_EQ(gf4_trace(Gf4::kOmegaBar), 1);
}

TEST(Gf4, TraceInnerProductExamples) {
    EXPECT_EQ(trace_inner_product(Gf4Vector::from_string("w"), Gf4Vector::from_string("w")), 0);
    EXPECT_EQ(trace_inner_product(Gf4Vector::from_string("1"), Gf4Vector::from_string("w")), 1);
    EXPECT_THROW(trace_inner_product(Gf4Vector::from_string("1"), Gf4Vector::from_string("11")),
                 std::invalid_argument);
}

TEST(Gf4, IsomorphismMatchesSymplecticForm) {
    EXPECT_EQ(to_gf4(V("XZYI")).str(), "1wW0");
    EXPECT_EQ(to_pauli(Gf4Vector::from_string("ww010")).str(), "ZZIXI");
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10000; t++) {
        auto a = random_pauli(rng, 8);
        auto b = random_pauli(rng, 8);
        ASSERT_EQ(to_pauli(to_gf4(a)), a);
        ASSERT_EQ(trace_inner_product(to_gf4(a), to_gf4(b)), symplectic_product(a, b));
    }
}

TEST(Gf4, OmegaAndSwapMaps) {
    EXPECT_EQ(omega_times(V("XYZI")).str(), "ZXYI");
    EXPECT_EQ(swap_z_y(V("XYZI")).str(), "XZYI");
    auto a = V("XYZIZ");
    auto w = to_gf4(a);
    for (auto &s : w.symbols) {
        s = gf4_mul(Gf4::kOmega, s);
    }
    EXPECT_EQ(to_pauli(w), omega_times(a));
}

TEST(Stabilizer, RejectsInvalidGenerators) {
    EXPECT_THROW(Stabilizer::parse("XI,ZI"), std::invalid_argument);
    EXPECT_THROW(Stabilizer::parse("XX,XX"), std::invalid_argument);
    EXPECT_THROW(Stabilizer::parse("XX,ZZI"), std::invalid_argument);
    EXPECT_NO_THROW(Stabilizer({}, 3));
    EXPECT_EQ(Stabilizer({}, 3).k(), 3);
}

TEST(Stabilizer, CyclicWordExpansion) {
    auto s = Stabilizer::from_cyclic_word("XZIZXII");
    EXPECT_EQ(s.n(), 7);
    EXPECT_EQ(s.k(), 1);
    EXPECT_EQ(s.generators()[1].str(), "IXZIZXI");
    EXPECT_EQ(Stabilizer::from_cyclic_word("YZIZY").k(), 1);
    EXPECT_THROW(Stabilizer::from_cyclic_word("XZI"), std::invalid_argument);
}

TEST(Stabilizer, SyndromeExamples) {
    auto s = steane();
    EXPECT_EQ(s.syndrome_of(PauliVector::identity(7)).bits, 0u);
    auto z = s.syndrome_of(V("XIIIIII"));
    EXPECT_EQ(z.length, 6);
    EXPECT_EQ(z.bits & 0b111, 0u);
    EXPECT_EQ((z.bits >> 3) & 0b111, 0b001u);
    s.for_each_element([&](const PauliVector &e) { EXPECT_EQ(s.syndrome_of(e).bits, 0u); });
    EXPECT_THROW(s.syndrome_of(V("XI")), std::invalid_argument);
}

TEST(Stabilizer, SyndromeIsLinearAndMatchesOracle) {
    std::mt19937_64 rng(3);
    auto s = Stabilizer::from_cyclic_word("XZIZXII");
    std::vector<PauliVector> gens = s.generators();
    for (int t = 0; t < 5000; t++) {
        auto a = random_pauli(rng, 7);
        auto b = random_pauli(rng, 7);
        ASSERT_EQ(s.syndrome_of(a * b).bits, s.syndrome_of(a).bits ^ s.syndrome_of(b).bits);
        ASSERT_EQ(s.syndrome_of(a).bits, oracle::syndrome(gens, a));
        ASSERT_EQ(s.syndrome_bits(a.key()), s.syndrome_of(a).bits);
    }
}

TEST(Stabilizer, CosetCanonicalForm) {
    auto s = Stabilizer::from_cyclic_word("YZIZY");
    EXPECT_EQ(s.coset_canonical(PauliVector::identity(5)), PauliVector::identity(5));
    for (const auto &g : s.generators()) {
        EXPECT_EQ(s.coset_canonical(g), PauliVector::identity(5));
    }
    std::vector<PauliVector> elements;
    s.for_each_element([&](const PauliVector &e) { elements.push_back(e); });
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10000; t++) {
        auto e = random_pauli(rng, 5);
        auto g = elements[rng() % elements.size()];
        ASSERT_EQ(s.coset_canonical(e), s.coset_canonical(e * g));
        auto idx = s.coset_index(e.key());
        ASSERT_EQ(s.coset_key_from_index(idx), s.coset_canonical(e).key());
    }
}

TEST(Stabilizer, CosetsPerSyndromeClass) {
    auto s = Stabilizer::from_cyclic_word("YZIZY");
    std::map<std::uint32_t, std::set<Gf2Word>> cosets;
    for (std::uint32_t i = 0; i < (1u << 10); i++) {
        auto e = oracle::pauli_from_index(i, 5);
        cosets[s.syndrome_of(e).bits].insert(s.coset_canonical(e).key());
    }
    EXPECT_EQ(cosets.size(), 16u);
    for (auto &[syn, set] : cosets) {
        EXPECT_EQ(set.size(), 4u) << syn;
    }
}

TEST(Stabilizer, NormalizerEnumeration) {
    auto s = Stabilizer::from_cyclic_word("YZIZY");
    auto elements = normalizer_elements(s);
    EXPECT_EQ(elements.size(), 64u);
    EXPECT_EQ(elements.front(), PauliVector::identity(5));
    std::set<Gf2Word> distinct;
    for (const auto &e : elements) {
        EXPECT_EQ(s.syndrome_of(e).bits, 0u);
        distinct.insert(e.key());
    }
    EXPECT_EQ(distinct.size(), 64u);
}

TEST(Distance, TableExamples) {
    EXPECT_EQ(distance(Stabilizer::from_cyclic_word("YZIZY")), 3);
    EXPECT_EQ(distance(Stabilizer::from_cyclic_word("XZIZXII")), 3);
    EXPECT_EQ(distance(Stabilizer::from_cyclic_word("YIZZIY")), 2);
    EXPECT_EQ(distance(Stabilizer::from_cyclic_word("YZIZIIZIZY")), 4);
    EXPECT_EQ(distance(steane()), 3);
    EXPECT_THROW(distance(Stabilizer::parse("XX,ZZ")), std::invalid_argument);
}

TEST(Distance, MatchesBruteForceOnRandomCodes) {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int n = 2; n <= 6; n++) {
        for (int k = 1; k < n; k++) {
            for (int t = 0; t < 6; t++) {
                // Random commuting generators by greedy rejection.
                std::vector<PauliVector> gens;
                RowBasis span;
                while (static_cast<int>(gens.size()) < n - k) {
                    auto c = random_pauli(rng, n);
                    bool ok = !span.contains(c.key());
                    for (const auto &g : gens) {
                        ok = ok && symplectic_product(g, c) == 0;
                    }
                    if (ok) {
                        span.insert(c.key());
                        gens.push_back(c);
                    }
                }
                Stabilizer s(gens, n);
                ASSERT_EQ(distance(s), oracle::distance(gens, n)) << s.str();
                checked++;
            }
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(Structure, SteaneIsDualContainingCss) {
    auto r = classify_structure(steane());
    EXPECT_TRUE(r.is_css);
    EXPECT_TRUE(r.is_dual_containing_css);
    EXPECT_TRUE(r.is_linear);
    EXPECT_TRUE(r.full_support);
}

TEST(Structure, CyclicExamples) {
    EXPECT_TRUE(has_weight4_rep(Stabilizer::from_cyclic_word("XZIZXII")));
    EXPECT_TRUE(is_linear(Stabilizer::from_cyclic_word("YZIZY")));
    EXPECT_FALSE(is_css(Stabilizer::from_cyclic_word("YZIZY")));
    EXPECT_TRUE(is_cssy(Stabilizer::from_cyclic_word("XIXIIXX").permuted(std::vector<int>{0, 1, 2, 3, 4, 5, 6}))
                == is_cssy(Stabilizer::from_cyclic_word("XIXIIXX")));
    auto y_only = Stabilizer::parse("YYII,IYYI,IIYY");
    EXPECT_TRUE(is_cssy(y_only));
    EXPECT_FALSE(is_css(y_only));
    EXPECT_FALSE(Stabilizer::parse("XXI").full_support());
}

TEST(Structure, InvariantUnderQubitPermutation) {
    std::mt19937_64 rng(4);
    for (const char *w : {"XZIZXII", "YZIZY", "YIZZIY", "XIXIIXX", "ZZIZIII"}) {
        auto s = Stabilizer::from_cyclic_word(w);
        std::vector<int> perm(static_cast<std::size_t>(s.n()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto t = s.permuted(perm);
        auto a = classify_structure(s);
        auto b = classify_structure(t);
        EXPECT_EQ(a.is_css, b.is_css);
        EXPECT_EQ(a.is_cssy, b.is_cssy);
        EXPECT_EQ(a.is_dual_containing_css, b.is_dual_containing_css);
        EXPECT_EQ(a.is_linear, b.is_linear);
        EXPECT_EQ(a.has_weight4_rep, b.has_weight4_rep);
        EXPECT_EQ(a.full_support, b.full_support);
        EXPECT_EQ(distance(s), distance(t));
        EXPECT_EQ(weight_enumerator(s), weight_enumerator(t));
    }
}

TEST(Equivalence, ReflexiveAndPermuted) {
    std::mt19937_64 rng(8);
    auto s = Stabilizer::from_cyclic_word("XZIZXII");
    EXPECT_TRUE(permutation_equivalent(s, s));
    std::vector<int> rev{6, 5, 4, 3, 2, 1, 0};
    EXPECT_TRUE(permutation_equivalent(s, s.permuted(rev)));
    for (int t = 0; t < 20; t++) {
        std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_TRUE(permutation_equivalent(s, s.permuted(perm)));
    }
    // X/Z exchange is not a qubit relabeling.
    EXPECT_FALSE(permutation_equivalent(s, Stabilizer::from_cyclic_word("ZXIXZII")));
    EXPECT_FALSE(permutation_equivalent(s, Stabilizer::from_cyclic_word("YZIZY")));
}

TEST(Equivalence, ClassesGroupPermutedCopies) {
    std::vector<Stabilizer> codes{Stabilizer::from_cyclic_word("XZIZXII"), Stabilizer::from_cyclic_word("ZXIXZII"),
                                  Stabilizer::from_cyclic_word("XZIZXII").permuted(std::vector<int>{3, 1, 4, 0, 2, 6, 5})};
    auto cls = equivalence_classes(codes);
    EXPECT_EQ(cls, (std::vector<int>{0, 1, 0}));
}

}  // namespace
}  // namespace stabopt
