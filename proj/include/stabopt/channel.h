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

#ifndef STABOPT_CHANNEL_H
#define STABOPT_CHANNEL_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabopt {

/// Single-qubit Pauli channel probabilities.
struct PauliChannel {
    double p_i = 1.0;
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;

    double total_error() const { return p_x + p_y + p_z; }
    double bias() const { return p_z / p_x; }
    friend bool operator==(const PauliChannel &, const PauliChannel &) = default;
};

enum class ChannelFamily { kBiasedXZ, kTwirledAD, kDepolarizing };

struct ChannelSpec {
    ChannelFamily family = ChannelFamily::kBiasedXZ;
    double p = 0.01;
    double eta = 1.0;

    /// "xz:p=0.01,eta=10", "ad:p=0.001,eta=100" or "depol:p=0.1".
    static ChannelSpec parse(std::string_view text);
    std::string str() const;
    friend bool operator==(const ChannelSpec &, const ChannelSpec &) = default;
};

/// Raised when no physical channel realizes the requested (p, eta).
class UnsatisfiableChannel : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Internal parameters found while resolving a spec, kept for diagnostics.
struct ChannelDiagnostics {
    double q_x = 0.0;  // biased XZ: independent X flip rate
    double q_z = 0.0;  // biased XZ: independent Z flip rate
    double gamma = 0.0;   // twirled AD: damping parameter
    double lambda = 0.0;  // twirled AD: dephasing parameter
};

PauliChannel resolve(const ChannelSpec &spec, ChannelDiagnostics *diagnostics = nullptr);

/// The 16-point grid p in {0.1, 0.01, 0.001, 0.0001} x eta in {1, 10, 100, 1000}.
std::vector<ChannelSpec> channel_grid(ChannelFamily family);

/// Parses a channel list: "grid:xz", "grid:ad" or ';'-separated channel specs.
std::vector<ChannelSpec> parse_channel_list(std::string_view text);

std::string family_name(ChannelFamily family);

}  // namespace stabopt

#endif
