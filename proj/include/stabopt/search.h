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

#ifndef STABOPT_SEARCH_H
#define STABOPT_SEARCH_H

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stabopt/channel.h"
#include "stabopt/fer.h"
#include "stabopt/pauli.h"

namespace stabopt {

enum class Constraint { kNone, kWeight4, kCss, kCssy, kLinear };
enum class MutationKind { kPermutation, kGenerator, kCombined, kRandom };

std::string constraint_name(Constraint c);
Constraint parse_constraint(std::string_view text);
std::string mutation_name(MutationKind m);
MutationKind parse_mutation(std::string_view text);

using Rng = std::mt19937_64;

/// Seed of the independent stream used by instance `index` of a run.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index);

struct MutationOptions {
    /// Lets a selected qubit draw the identity permutation as well.
    bool include_identity_perm = false;
};

/// Uniform random [[n,k]] stabilizer involving every qubit, built one
/// generator at a time from the commuting complement of the partial span.
/// Throws InfeasibleConstraint after 10,000 failed rebuilds, or at once for
/// Linear with odd n - k.
Stabilizer random_stabilizer(int n, int k, Constraint constraint, Rng &rng);

/// One mutation step. Permutation is not available under CSS or CSSY
/// (std::invalid_argument); Combined then applies only its generator part.
/// Throws MutationFailed when resampling runs out of retries.
Stabilizer mutate(const Stabilizer &s, MutationKind kind, Constraint constraint, Rng &rng,
                  const MutationOptions &options = {});

/// True iff s involves every qubit and meets the constraint with its current
/// generators (Weight4 checks the stored generators themselves).
bool satisfies_constraint(const Stabilizer &s, Constraint constraint);

struct SearchConfig {
    int n = 7;
    int k = 1;
    int restarts = 1;
    int iterations = 0;
    std::vector<ChannelSpec> channels;
    Constraint constraint = Constraint::kNone;
    MutationKind mutation = MutationKind::kCombined;
    std::uint64_t seed = 1;
    double target_bound = 0.01;
    MutationOptions mutation_options;
    /// Percentile q of the trace; the recorded value is the
    /// ceil(restarts * (100 - q) / 100)-th lowest instance objective.
    double trace_percentile = 95.0;
    bool record_trace = false;
    /// 0 picks STABOPT_THREADS or the hardware concurrency.
    int threads = 0;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
};

struct InstanceResult {
    Stabilizer final_code;
    double objective_seo = 1.0;
    double objective_bound = 0.0;
    double final_map = 1.0;
    double final_map_bound = 0.0;
    int accepted = 0;
    /// Objective after each iteration, starting with the initial code.
    std::vector<double> objective_trace;
};

struct SearchResult {
    Stabilizer best_stabilizer;
    std::size_t best_instance = 0;
    double objective_seo = 1.0;
    double final_fer_map = 1.0;
    double final_fer_map_bound = 0.0;
    std::vector<InstanceResult> instances;
    /// Percentile of instance objectives after each iteration (record_trace only).
    std::vector<double> trace;
};

/// Independent hill climbs, accepting a mutant when its geometric-mean SEO
/// estimate is no larger. Results do not depend on the thread count.
SearchResult hill_climb(const SearchConfig &config, ErrorSetCache &cache);

/// The ceil(size * (100 - q) / 100)-th lowest value.
double percentile_lowest(std::vector<double> values, double q);

struct RandomSearchEntry {
    Stabilizer code;
    double value = 1.0;
    double bound = 0.0;
};

/// `count` independent random codes scored by the geometric mean of `kind`.
std::vector<RandomSearchEntry> random_search(const SearchConfig &config, int count, FerKind kind,
                                             ErrorSetCache &cache);

/// Number of workers for a request of `requested` (0 = automatic).
int resolve_threads(int requested);

/// Canonical form of the stabilizer group, for deterministic tie-breaks.
std::vector<Gf2Word> canonical_form(const Stabilizer &s);

}  // namespace stabopt

#endif
