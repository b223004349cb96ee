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

#include "stabopt/channel.h"

#include <gtest/gtest.h>

#include <cmath>

namespace stabopt {

void PrintTo(ChannelFamily family, std::ostream *os) { *os << family_name(family); }

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

class GridTest : public ::testing::TestWithParam<ChannelFamily> {};

TEST_P(GridTest, RoundTripReproducesSpec) {
    for (const auto &spec : channel_grid(GetParam())) {
        PauliChannel ch = resolve(spec);
        EXPECT_LE(rel(ch.total_error(), spec.p), 1e-10) << spec.str();
        EXPECT_LE(rel(ch.bias(), spec.eta), 1e-10) << spec.str();
        EXPECT_NEAR(ch.p_i + ch.p_x + ch.p_y + ch.p_z, 1.0, 1e-12);
        for (double v : {ch.p_i, ch.p_x, ch.p_y, ch.p_z}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST_P(GridTest, BiasMonotonicity) {
    for (double p : {0.1, 0.01, 0.001, 0.0001}) {
        PauliChannel prev = resolve(ChannelSpec{GetParam(), p, 0.5});
        for (double eta : {1.0, 2.0, 10.0, 100.0, 1000.0}) {
            PauliChannel ch = resolve(ChannelSpec{GetParam(), p, eta});
            EXPECT_LT(ch.p_x, prev.p_x);
            EXPECT_GT(ch.p_z, prev.p_z);
            prev = ch;
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Families, GridTest, ::testing::Values(ChannelFamily::kBiasedXZ, ChannelFamily::kTwirledAD),
                         [](const auto &info) { return family_name(info.param); });

TEST(BiasedXZ, ForwardSubstitution) {
    ChannelDiagnostics d;
    PauliChannel ch = resolve(ChannelSpec{ChannelFamily::kBiasedXZ, 0.01, 10.0}, &d);
    EXPECT_LE(rel(1.0 - (1.0 - d.q_x) * (1.0 - d.q_z), 0.01), 1e-10);
    EXPECT_LE(rel(d.q_z * (1.0 - d.q_x) / (d.q_x * (1.0 - d.q_z)), 10.0), 1e-10);
    EXPECT_DOUBLE_EQ(ch.p_x, d.q_x * (1.0 - d.q_z));
    EXPECT_DOUBLE_EQ(ch.p_y, d.q_x * d.q_z);
}

TEST(BiasedXZ, UnitBiasIsSymmetric) {
    for (double p : {0.1, 0.01, 0.001, 0.0001}) {
        ChannelDiagnostics d;
        resolve(ChannelSpec{ChannelFamily::kBiasedXZ, p, 1.0}, &d);
        EXPECT_LE(rel(d.q_x, d.q_z), 1e-12);
    }
}

TEST(TwirledAD, UnitBiasIsDepolarizing) {
    for (double p : {0.3, 0.1, 0.01}) {
        PauliChannel ch = resolve(ChannelSpec{ChannelFamily::kTwirledAD, p, 1.0});
        EXPECT_DOUBLE_EQ(ch.p_x, p / 3.0);
        EXPECT_DOUBLE_EQ(ch.p_y, p / 3.0);
        EXPECT_DOUBLE_EQ(ch.p_z, p / 3.0);
    }
}

TEST(TwirledAD, XEqualsYExactly) {
    for (const auto &spec : channel_grid(ChannelFamily::kTwirledAD)) {
        PauliChannel ch = resolve(spec);
        EXPECT_EQ(ch.p_x, ch.p_y);
    }
}

TEST(TwirledAD, DiagnosticsAndRangeCheck) {
    ChannelDiagnostics d;
    resolve(ChannelSpec{ChannelFamily::kTwirledAD, 0.01, 10.0}, &d);
    EXPECT_DOUBLE_EQ(d.gamma, 4.0 * 0.01 / 12.0);
    EXPECT_GE(d.lambda, 0.0);
    // Large p with little bias pushes lambda negative.
    EXPECT_THROW(resolve(ChannelSpec{ChannelFamily::kTwirledAD, 0.9, 1.0}), UnsatisfiableChannel);
}

TEST(Depolarizing, EqualMarginals) {
    PauliChannel ch = resolve(ChannelSpec::parse("depol:p=0.1"));
    EXPECT_DOUBLE_EQ(ch.p_x, 0.1 / 3.0);
    EXPECT_DOUBLE_EQ(ch.p_i, 0.9);
}

TEST(ChannelSpec, ParseAndPrint) {
    auto s = ChannelSpec::parse("xz:p=0.01,eta=10");
    EXPECT_EQ(s.family, ChannelFamily::kBiasedXZ);
    EXPECT_EQ(s.p, 0.01);
    EXPECT_EQ(s.eta, 10.0);
    EXPECT_EQ(s.str(), "xz:p=0.01,eta=10");
    EXPECT_EQ(ChannelSpec::parse("ad:eta=100,p=0.001").str(), "ad:p=0.001,eta=100");
    EXPECT_EQ(ChannelSpec::parse(ChannelSpec{ChannelFamily::kTwirledAD, 1e-4, 1000}.str()),
              (ChannelSpec{ChannelFamily::kTwirledAD, 1e-4, 1000}));
    EXPECT_THROW(ChannelSpec::parse("xz:p=0.01"), std::invalid_argument);
    EXPECT_THROW(ChannelSpec::parse("foo:p=0.1"), std::invalid_argument);
    EXPECT_THROW(ChannelSpec::parse("xz:p=abc,eta=1"), std::invalid_argument);
    EXPECT_THROW(ChannelSpec::parse("xz"), std::invalid_argument);
    EXPECT_THROW(resolve(ChannelSpec{ChannelFamily::kBiasedXZ, 0.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(resolve(ChannelSpec{ChannelFamily::kBiasedXZ, 0.1, -1.0}), std::invalid_argument);
}

TEST(ChannelList, PresetsAndLists) {
    auto g = parse_channel_list("grid:xz");
    ASSERT_EQ(g.size(), 16u);
    EXPECT_EQ(g.front().str(), "xz:p=0.1,eta=1");
    EXPECT_EQ(g.back().str(), "xz:p=1e-04,eta=1000");
    EXPECT_EQ(parse_channel_list("grid:ad").front().family, ChannelFamily::kTwirledAD);
    auto l = parse_channel_list("xz:p=0.1,eta=1;depol:p=0.01");
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[1].family, ChannelFamily::kDepolarizing);
    EXPECT_THROW(parse_channel_list(""), std::invalid_argument);
}

}  // namespace
}  // namespace stabopt
