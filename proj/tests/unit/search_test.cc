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

#include "stabopt/search.h"

#include <gtest/gtest.h>

#include <set>

#include "stabopt/errors.h"

namespace stabopt {
namespace {

bool only_types(const Stabilizer &s, char a, char b) {
    for (const auto &g : s.generators()) {
        auto c = g.composition();
        int types = (c.x > 0) + (c.y > 0) + (c.z > 0);
        bool ok_a = (a == 'X' ? c.x : a == 'Y' ? c.y : c.z) == g.weight();
        bool ok_b = (b == 'X' ? c.x : b == 'Y' ? c.y : c.z) == g.weight();
        if (types != 1 || !(ok_a || ok_b)) {
            return false;
        }
    }
    return true;
}

void expect_constraint(const Stabilizer &s, Constraint c, int n, int k) {
    ASSERT_EQ(s.n(), n);
    ASSERT_EQ(s.k(), k);
    ASSERT_TRUE(s.full_support()) << s.str();
    ASSERT_TRUE(satisfies_constraint(s, c)) << s.str();
    switch (c) {
        case Constraint::kWeight4:
            for (const auto &g : s.generators()) {
                ASSERT_EQ(g.weight(), 4) << s.str();
            }
            break;
        case Constraint::kCss:
            ASSERT_TRUE(is_css(s));
            ASSERT_TRUE(only_types(s, 'X', 'Z')) << s.str();
            break;
        case Constraint::kCssy:
            ASSERT_TRUE(is_cssy(s));
            ASSERT_TRUE(only_types(s, 'X', 'Y')) << s.str();
            break;
        case Constraint::kLinear:
            ASSERT_TRUE(is_linear(s));
            break;
        case Constraint::kNone:
            break;
    }
}

struct Cell {
    int n;
    int k;
    Constraint c;
};

void PrintTo(const Cell &cell, std::ostream *os) {
    *os << constraint_name(cell.c) << " [[" << cell.n << "," << cell.k << "]]";
}

class ConstraintTest : public ::testing::TestWithParam<Cell> {};

TEST_P(ConstraintTest, RandomCodesConform) {
    auto [n, k, c] = GetParam();
    Rng rng(17);
    for (int i = 0; i < 30; i++) {
        expect_constraint(random_stabilizer(n, k, c, rng), c, n, k);
    }
}

TEST_P(ConstraintTest, MutationsPreserveConstraint) {
    auto [n, k, c] = GetParam();
    Rng rng(23);
    Stabilizer s = random_stabilizer(n, k, c, rng);
    for (MutationKind m : {MutationKind::kGenerator, MutationKind::kCombined, MutationKind::kRandom,
                           MutationKind::kPermutation}) {
        if (m == MutationKind::kPermutation && (c == Constraint::kCss || c == Constraint::kCssy)) {
            EXPECT_THROW(mutate(s, m, c, rng), std::invalid_argument);
            continue;
        }
        for (int i = 0; i < 30; i++) {
            s = mutate(s, m, c, rng);
            expect_constraint(s, c, n, k);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(
    Cells, ConstraintTest,
    ::testing::Values(Cell{5, 1, Constraint::kNone}, Cell{9, 1, Constraint::kNone}, Cell{12, 3, Constraint::kNone},
                      Cell{7, 1, Constraint::kWeight4}, Cell{8, 2, Constraint::kWeight4}, Cell{7, 1, Constraint::kCss},
                      Cell{9, 3, Constraint::kCss}, Cell{7, 1, Constraint::kCssy}, Cell{8, 2, Constraint::kCssy},
                      Cell{5, 1, Constraint::kLinear}, Cell{8, 2, Constraint::kLinear}, Cell{11, 3, Constraint::kLinear}),
    [](const auto &info) {
        return constraint_name(info.param.c) + "_" + std::to_string(info.param.n) + "_" + std::to_string(info.param.k);
    });

TEST(RandomStabilizer, InfeasibleLinear) {
    Rng rng(1);
    EXPECT_THROW(random_stabilizer(7, 2, Constraint::kLinear, rng), InfeasibleConstraint);
    EXPECT_THROW(random_stabilizer(5, 3, Constraint::kLinear, rng), InfeasibleConstraint);
    EXPECT_THROW(random_stabilizer(5, 5, Constraint::kNone, rng), std::invalid_argument);
}

TEST(RandomStabilizer, DeterministicPerSeed) {
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 10; i++) {
        EXPECT_EQ(random_stabilizer(8, 2, Constraint::kNone, a).str(), random_stabilizer(8, 2, Constraint::kNone, b).str());
    }
}

TEST(RandomStabilizer, GeneratorsAreSpreadOut) {
    // Uniform draws should produce many distinct [[5,1]] codes.
    Rng rng(4);
    std::set<std::vector<Gf2Word>> seen;
    for (int i = 0; i < 200; i++) {
        seen.insert(canonical_form(random_stabilizer(5, 1, Constraint::kNone, rng)));
    }
    EXPECT_GT(seen.size(), 150u);
}

TEST(Mutate, PermutationKeepsSupportPattern) {
    Rng rng(8);
    for (bool identity : {false, true}) {
        for (int t = 0; t < 50; t++) {
            Stabilizer s = random_stabilizer(7, 1, Constraint::kNone, rng);
            Stabilizer m = mutate(s, MutationKind::kPermutation, Constraint::kNone, rng, MutationOptions{identity});
            ASSERT_EQ(s.num_generators(), m.num_generators());
            for (int i = 0; i < s.num_generators(); i++) {
                const auto &a = s.generators()[static_cast<std::size_t>(i)];
                const auto &b = m.generators()[static_cast<std::size_t>(i)];
                ASSERT_EQ(a.x | a.z, b.x | b.z);
            }
        }
    }
}

TEST(Mutate, LinearPermutationsAreThreeCycles) {
    Rng rng(12);
    Stabilizer s = random_stabilizer(6, 2, Constraint::kLinear, rng);
    for (int t = 0; t < 50; t++) {
        Stabilizer m = mutate(s, MutationKind::kPermutation, Constraint::kLinear, rng);
        ASSERT_TRUE(is_linear(m));
        s = m;
    }
}

TEST(Names, RoundTrip) {
    for (Constraint c : {Constraint::kNone, Constraint::kWeight4, Constraint::kCss, Constraint::kCssy,
                         Constraint::kLinear}) {
        EXPECT_EQ(parse_constraint(constraint_name(c)), c);
    }
    for (MutationKind m : {MutationKind::kPermutation, MutationKind::kGenerator, MutationKind::kCombined,
                           MutationKind::kRandom}) {
        EXPECT_EQ(parse_mutation(mutation_name(m)), m);
    }
    EXPECT_THROW(parse_constraint("bogus"), std::invalid_argument);
    EXPECT_THROW(parse_mutation("bogus"), std::invalid_argument);
}

TEST(Percentile, LowestRank) {
    std::vector<double> v;
    for (int i = 100; i >= 1; i--) {
        v.push_back(i);
    }
    EXPECT_EQ(percentile_lowest(v, 95), 5.0);
    EXPECT_EQ(percentile_lowest(v, 50), 50.0);
    EXPECT_EQ(percentile_lowest(v, 0), 100.0);
    EXPECT_EQ(percentile_lowest({3.0}, 95), 3.0);
    std::vector<double> ten{9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    EXPECT_EQ(percentile_lowest(ten, 95), 0.0);
}

TEST(Seeds, StreamsDiffer) {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; i++) {
        seeds.insert(stream_seed(42, i));
    }
    EXPECT_EQ(seeds.size(), 1000u);
    EXPECT_NE(stream_seed(1, 0), stream_seed(2, 0));
}

SearchConfig small_config() {
    SearchConfig c;
    c.n = 6;
    c.k = 1;
    c.restarts = 6;
    c.iterations = 15;
    c.channels = {ChannelSpec::parse("xz:p=0.01,eta=10"), ChannelSpec::parse("xz:p=0.1,eta=1")};
    c.seed = 7;
    c.record_trace = true;
    return c;
}

TEST(Config, Validation) {
    SearchConfig c = small_config();
    EXPECT_NO_THROW(c.validate());
    c.restarts = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.channels.clear();
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.k = 6;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.constraint = Constraint::kCss;
    c.mutation = MutationKind::kPermutation;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.target_bound = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(HillClimb, TracesAreNonIncreasingAndResultConsistent) {
    ErrorSetCache cache;
    SearchConfig c = small_config();
    SearchResult r = hill_climb(c, cache);
    ASSERT_EQ(r.instances.size(), 6u);
    ASSERT_EQ(r.trace.size(), 16u);
    double best_map = 2.0;
    for (const auto &inst : r.instances) {
        ASSERT_EQ(inst.objective_trace.size(), 16u);
        for (std::size_t i = 1; i < inst.objective_trace.size(); i++) {
            ASSERT_LE(inst.objective_trace[i], inst.objective_trace[i - 1]);
        }
        EXPECT_EQ(inst.objective_trace.back(), inst.objective_seo);
        EXPECT_LE(inst.final_map, inst.objective_seo);
        best_map = std::min(best_map, inst.final_map);
    }
    for (std::size_t i = 1; i < r.trace.size(); i++) {
        EXPECT_LE(r.trace[i], r.trace[i - 1]);
    }
    EXPECT_EQ(r.final_fer_map, best_map);
    EXPECT_EQ(r.instances[r.best_instance].final_map, best_map);
    EXPECT_EQ(r.best_stabilizer.str(), r.instances[r.best_instance].final_code.str());
    EXPECT_LE(r.final_fer_map, r.objective_seo);
}

TEST(HillClimb, DeterministicAcrossThreadCounts) {
    SearchConfig c = small_config();
    c.threads = 1;
    ErrorSetCache c1;
    SearchResult a = hill_climb(c, c1);
    c.threads = 3;
    ErrorSetCache c2;
    SearchResult b = hill_climb(c, c2);
    ErrorSetCache c3;
    SearchResult again = hill_climb(c, c3);
    for (const SearchResult *other : {&b, &again}) {
        EXPECT_EQ(a.best_stabilizer.str(), other->best_stabilizer.str());
        EXPECT_EQ(a.final_fer_map, other->final_fer_map);
        EXPECT_EQ(a.trace, other->trace);
        for (std::size_t i = 0; i < a.instances.size(); i++) {
            EXPECT_EQ(a.instances[i].objective_trace, other->instances[i].objective_trace);
            EXPECT_EQ(a.instances[i].final_code.str(), other->instances[i].final_code.str());
        }
    }
}

TEST(HillClimb, ZeroIterationsIsRandomSearch) {
    SearchConfig c = small_config();
    c.iterations = 0;
    ErrorSetCache cache;
    SearchResult r = hill_climb(c, cache);
    for (const auto &inst : r.instances) {
        EXPECT_EQ(inst.objective_trace.size(), 1u);
        EXPECT_EQ(inst.accepted, 0);
    }
}

TEST(HillClimb, ConstrainedRunsStayConstrained) {
    for (Constraint con : {Constraint::kWeight4, Constraint::kCss, Constraint::kCssy, Constraint::kLinear}) {
        SearchConfig c = small_config();
        c.n = 7;
        c.k = con == Constraint::kLinear ? 3 : 1;
        c.constraint = con;
        c.restarts = 3;
        c.iterations = 10;
        ErrorSetCache cache;
        SearchResult r = hill_climb(c, cache);
        for (const auto &inst : r.instances) {
            expect_constraint(inst.final_code, con, c.n, c.k);
        }
    }
}

TEST(RandomSearch, ProducesScoredCodes) {
    SearchConfig c = small_config();
    ErrorSetCache cache;
    auto a = random_search(c, 5, FerKind::kMap, cache);
    auto b = random_search(c, 5, FerKind::kMap, cache);
    ASSERT_EQ(a.size(), 5u);
    for (std::size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].code.str(), b[i].code.str());
        EXPECT_EQ(a[i].value, b[i].value);
        EXPECT_LE(a[i].bound, 0.01);
    }
}

TEST(CanonicalForm, DependsOnlyOnGroup) {
    auto s = Stabilizer::parse("XXXX,ZZZZ");
    auto t = Stabilizer::parse("YYYY,ZZZZ");
    EXPECT_EQ(canonical_form(s), canonical_form(t));
    EXPECT_EQ(canonical_form(s), canonical_form(Stabilizer::parse("XXXX,YYYY")));
    EXPECT_NE(canonical_form(Stabilizer::parse("XXII,ZZII")), canonical_form(Stabilizer::parse("XXII,IIZZ")));
}

TEST(Threads, Resolution) {
    EXPECT_EQ(resolve_threads(3), 3);
    EXPECT_GE(resolve_threads(0), 1);
}

}  // namespace
}  // namespace stabopt
