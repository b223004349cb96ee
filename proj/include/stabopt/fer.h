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

#ifndef STABOPT_FER_H
#define STABOPT_FER_H

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>

#include "stabopt/channel.h"
#include "stabopt/errorset.h"
#include "stabopt/pauli.h"

namespace stabopt {

enum class FerKind { kMap, kSe, kSeo };

std::string kind_name(FerKind kind);
/// "map", "se" or "seo".
FerKind parse_kind(std::string_view text);

struct FerEstimate {
    double value = 1.0;
    FerKind kind = FerKind::kMap;
    /// 1 - P(E) of the error set used.
    double residual = 1.0;
    /// Relative-error bound; +infinity when unbounded.
    double bound = 0.0;
    /// SEO only: (2^(n-k) - r) times the smallest member probability.
    double alpha = 0.0;
    /// Number of distinct syndromes observed in E.
    std::size_t syndromes = 0;
    std::size_t error_count = 0;
    bool complete = false;
};

/// Coset decoder: F_E = 1 - sum over syndromes of the largest coset mass.
FerEstimate fer_map(const Stabilizer &s, const ErrorSet &e);
/// Decoder that corrects with the coset of the most probable single error.
FerEstimate fer_se(const Stabilizer &s, const ErrorSet &e);
/// Syndrome decoder ignoring degeneracy: only the most probable error counts.
FerEstimate fer_seo(const Stabilizer &s, const ErrorSet &e);
FerEstimate fer_estimate(const Stabilizer &s, const ErrorSet &e, FerKind kind);

/// Thread-safe store of error sets keyed by (n, channel, decade), where
/// decade d holds the set built to residual 10^-d. Each decade extends the
/// previous one; concurrent requests for one key build it once.
class ErrorSetCache {
   public:
    /// Reads STABOPT_MAX_ERRORS when set.
    static std::size_t default_max_errors();

    explicit ErrorSetCache(std::size_t max_errors = default_max_errors()) : max_errors_(max_errors) {}

    std::shared_ptr<const ErrorSet> get(int n, const PauliChannel &channel, int decade);
    std::size_t max_errors() const { return max_errors_; }

   private:
    using Key = std::tuple<int, double, double, double, double, int>;
    struct Entry {
        std::mutex mu;
        std::shared_ptr<const ErrorSet> set;
    };

    std::size_t max_errors_;
    std::mutex mu_;
    std::map<Key, std::shared_ptr<Entry>> entries_;
};

/// Evaluates at residual 0.1, then 0.01, ... until bound <= target_bound or
/// the error set is complete. Throws BudgetExceeded with the last estimate
/// when the cache's size limit is reached first.
FerEstimate fer_adaptive(const Stabilizer &s, const PauliChannel &channel, FerKind kind, double target_bound,
                         ErrorSetCache &cache);
FerEstimate fer_adaptive(const Stabilizer &s, const ChannelSpec &spec, FerKind kind, double target_bound,
                         ErrorSetCache &cache);

struct GeometricMeanFer {
    double value = 1.0;
    /// Largest per-channel bound.
    double bound = 0.0;
    std::vector<FerEstimate> per_channel;
};

/// (prod F_i)^(1/N) over the channels.
GeometricMeanFer geometric_mean_fer(const Stabilizer &s, std::span<const PauliChannel> channels, FerKind kind,
                                    double target_bound, ErrorSetCache &cache);
GeometricMeanFer geometric_mean_fer(const Stabilizer &s, std::span<const ChannelSpec> specs, FerKind kind,
                                    double target_bound, ErrorSetCache &cache);

double geometric_mean(std::span<const double> values);

}  // namespace stabopt

#endif
