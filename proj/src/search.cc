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

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "stabopt/errors.h"

namespace stabopt {

namespace {

constexpr int kRebuildAttempts = 10000;
constexpr int kSampleAttempts = 256;
constexpr int kMutationRetries = 100;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform integer in [0, bound) without implementation-defined distributions.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

bool coin(Rng &rng) { return (rng() >> 63) != 0; }

/// b' such that parity(a & b') is the symplectic product of a and b.
Gf2Word symplectic_dual(Gf2Word key) { return (key >> kZOffset) | ((key & 0xFFFF) << kZOffset); }

Gf2Word random_combination(const std::vector<Gf2Word> &basis, Rng &rng) {
    Gf2Word v = 0;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < basis.size(); i++) {
        if (i % 64 == 0) {
            bits = rng();
        }
        if ((bits >> (i % 64)) & 1) {
            v ^= basis[i];
        }
    }
    return v;
}

std::uint16_t full_qubit_mask(int n) { return static_cast<std::uint16_t>((1u << n) - 1); }

bool covers_all_qubits(const std::vector<PauliVector> &gens, int n) {
    std::uint16_t cover = 0;
    for (const auto &g : gens) {
        cover |= g.support();
    }
    return cover == full_qubit_mask(n);
}

const std::vector<Gf2Word> &weight4_paulis(int n) {
    static std::vector<std::vector<Gf2Word>> table(kMaxQubits + 1);
    static std::once_flag once[kMaxQubits + 1];
    std::call_once(once[n], [n] {
        auto &out = table[static_cast<std::size_t>(n)];
        for (std::uint32_t support = 0; support < (1u << n); support++) {
            if (std::popcount(support) != 4) {
                continue;
            }
            int q[4];
            int t = 0;
            for (int b = 0; b < n; b++) {
                if ((support >> b) & 1) {
                    q[t++] = b;
                }
            }
            for (int code = 0; code < 81; code++) {
                Gf2Word key = 0;
                int c = code;
                for (int j = 0; j < 4; j++) {
                    int sym = c % 3 + 1;  // 1 = X, 2 = Z, 3 = Y
                    c /= 3;
                    if (sym & 1) {
                        key |= Gf2Word{1} << q[j];
                    }
                    if (sym & 2) {
                        key |= Gf2Word{1} << (q[j] + kZOffset);
                    }
                }
                out.push_back(key);
            }
        }
    });
    return table[static_cast<std::size_t>(n)];
}

/// Commuting complement of the partial generating set inside `domain`, with
/// the constraint rows given as functions of each generator.
std::vector<Gf2Word> commuting_basis(const std::vector<PauliVector> &gens, Gf2Word domain) {
    std::vector<Gf2Word> rows;
    rows.reserve(gens.size());
    for (const auto &g : gens) {
        rows.push_back(symplectic_dual(g.key()));
    }
    return gf2_nullspace(rows, domain);
}

/// Draws a uniform element of `basis`'s span outside `span`, if any exists.
std::optional<Gf2Word> sample_outside(const std::vector<Gf2Word> &basis, const RowBasis &span, Rng &rng) {
    if (std::all_of(basis.begin(), basis.end(), [&](Gf2Word b) { return span.contains(b); })) {
        return std::nullopt;
    }
    for (;;) {
        Gf2Word v = random_combination(basis, rng);
        if (!span.contains(v)) {
            return v;
        }
    }
}

/// Picks one new generator from the constraint's pool, or nullopt when the
/// pool is empty.
std::optional<PauliVector> sample_generator(const std::vector<PauliVector> &gens, const RowBasis &span, int n,
                                            Constraint constraint, Rng &rng) {
    Gf2Word low = full_qubit_mask(n);
    switch (constraint) {
        case Constraint::kNone:
        case Constraint::kLinear: {
            auto v = sample_outside(commuting_basis(gens, key_mask(n)), span, rng);
            return v ? std::optional(PauliVector::from_key(*v, n)) : std::nullopt;
        }
        case Constraint::kWeight4: {
            std::vector<Gf2Word> pool;
            for (Gf2Word key : weight4_paulis(n)) {
                bool ok = !span.contains(key);
                for (std::size_t i = 0; ok && i < gens.size(); i++) {
                    ok = parity(key & symplectic_dual(gens[i].key())) == 0;
                }
                if (ok) {
                    pool.push_back(key);
                }
            }
            if (pool.empty()) {
                return std::nullopt;
            }
            return PauliVector::from_key(pool[uniform_below(rng, pool.size())], n);
        }
        case Constraint::kCss:
        case Constraint::kCssy: {
            // X-only pool, then Z-only (CSS) or Y-only (CSSY).
            auto pool = [&](bool x_type) {
                std::vector<Gf2Word> rows;
                for (const auto &g : gens) {
                    if (x_type) {
                        rows.push_back(g.z);
                    } else if (constraint == Constraint::kCss) {
                        rows.push_back(g.x);
                    } else {
                        rows.push_back(static_cast<Gf2Word>(g.x ^ g.z));
                    }
                }
                auto basis = gf2_nullspace(rows, low);
                for (Gf2Word &b : basis) {
                    if (x_type) {
                        continue;
                    }
                    b = constraint == Constraint::kCss ? (b << kZOffset) : (b | (b << kZOffset));
                }
                return basis;
            };
            bool first = coin(rng);
            for (bool x_type : {first, !first}) {
                if (auto v = sample_outside(pool(x_type), span, rng)) {
                    return PauliVector::from_key(*v, n);
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Extends gens to `target` generators. Returns false if a pool ran dry.
bool fill_generators(std::vector<PauliVector> &gens, int n, std::size_t target, Constraint constraint, Rng &rng) {
    RowBasis span;
    for (const auto &g : gens) {
        span.insert(g.key());
    }
    while (gens.size() < target) {
        if (constraint == Constraint::kLinear) {
            bool added = false;
            for (int t = 0; t < kSampleAttempts && !added; t++) {
                auto m = sample_generator(gens, span, n, constraint, rng);
                if (!m) {
                    return false;
                }
                PauliVector wm = omega_times(*m);
                // M commutes with wM only at even weight.
                if (m->weight() % 2 != 0) {
                    continue;
                }
                RowBasis next = span;
                next.insert(m->key());
                if (!next.insert(wm.key())) {
                    continue;
                }
                span = next;
                gens.push_back(*m);
                gens.push_back(wm);
                added = true;
            }
            if (!added) {
                return false;
            }
            continue;
        }
        auto g = sample_generator(gens, span, n, constraint, rng);
        if (!g) {
            return false;
        }
        span.insert(g->key());
        gens.push_back(*g);
    }
    return true;
}

/// The six permutations of (X, Y, Z) as images of X, Y, Z; identity first,
/// then the two 3-cycles.
constexpr char kPerms[6][3] = {{'X', 'Y', 'Z'}, {'Z', 'X', 'Y'}, {'Y', 'Z', 'X'},
                               {'Y', 'X', 'Z'}, {'Z', 'Y', 'X'}, {'X', 'Z', 'Y'}};

Stabilizer permutation_mutation(const Stabilizer &s, Constraint constraint, Rng &rng, const MutationOptions &opt) {
    int n = s.n();
    std::vector<PauliVector> gens = s.generators();
    for (int q = 0; q < n; q++) {
        if (uniform_below(rng, static_cast<std::uint64_t>(n)) != 0) {
            continue;
        }
        std::size_t idx;
        if (constraint == Constraint::kLinear) {
            idx = 1 + uniform_below(rng, 2);
        } else if (opt.include_identity_perm) {
            idx = uniform_below(rng, 6);
        } else {
            idx = 1 + uniform_below(rng, 5);
        }
        const char *img = kPerms[idx];
        for (auto &g : gens) {
            int x = (g.x >> q) & 1;
            int z = (g.z >> q) & 1;
            if (x == 0 && z == 0) {
                continue;
            }
            char from = x && z ? 'Y' : (x ? 'X' : 'Z');
            char to = img[from == 'X' ? 0 : (from == 'Y' ? 1 : 2)];
            std::uint16_t bit = static_cast<std::uint16_t>(1u << q);
            g.x = static_cast<std::uint16_t>((g.x & ~bit) | ((to == 'X' || to == 'Y') ? bit : 0));
            g.z = static_cast<std::uint16_t>((g.z & ~bit) | ((to == 'Z' || to == 'Y') ? bit : 0));
        }
    }
    return Stabilizer(std::move(gens), n);
}

Stabilizer generator_mutation(const Stabilizer &s, Constraint constraint, Rng &rng) {
    int n = s.n();
    const auto &old = s.generators();
    std::vector<PauliVector> kept;
    if (constraint == Constraint::kLinear) {
        std::uint64_t pairs = old.size() / 2;
        for (std::size_t i = 0; i + 1 < old.size(); i += 2) {
            if (uniform_below(rng, pairs) != 0) {
                kept.push_back(old[i]);
                kept.push_back(old[i + 1]);
            }
        }
    } else {
        for (const auto &g : old) {
            if (uniform_below(rng, old.size()) != 0) {
                kept.push_back(g);
            }
        }
    }
    for (int attempt = 0; attempt < kRebuildAttempts; attempt++) {
        std::vector<PauliVector> gens = kept;
        if (fill_generators(gens, n, old.size(), constraint, rng) && covers_all_qubits(gens, n)) {
            return Stabilizer(std::move(gens), n);
        }
    }
    throw MutationFailed("generator mutation could not restore full support");
}

}  // namespace

std::string constraint_name(Constraint c) {
    switch (c) {
        case Constraint::kNone:
            return "none";
        case Constraint::kWeight4:
            return "weight4";
        case Constraint::kCss:
            return "css";
        case Constraint::kCssy:
            return "cssy";
        case Constraint::kLinear:
            return "linear";
    }
    return "?";
}

Constraint parse_constraint(std::string_view text) {
    for (auto c : {Constraint::kNone, Constraint::kWeight4, Constraint::kCss, Constraint::kCssy, Constraint::kLinear}) {
        if (text == constraint_name(c)) {
            return c;
        }
    }
    throw std::invalid_argument("unknown constraint '" + std::string(text) +
                                "' (expected none, weight4, css, cssy or linear)");
}

std::string mutation_name(MutationKind m) {
    switch (m) {
        case MutationKind::kPermutation:
            return "permutation";
        case MutationKind::kGenerator:
            return "generator";
        case MutationKind::kCombined:
            return "combined";
        case MutationKind::kRandom:
            return "random";
    }
    return "?";
}

MutationKind parse_mutation(std::string_view text) {
    for (auto m : {MutationKind::kPermutation, MutationKind::kGenerator, MutationKind::kCombined,
                   MutationKind::kRandom}) {
        if (text == mutation_name(m)) {
            return m;
        }
    }
    throw std::invalid_argument("unknown mutation '" + std::string(text) +
                                "' (expected permutation, generator, combined or random)");
}

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(master_seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

bool satisfies_constraint(const Stabilizer &s, Constraint constraint) {
    if (!s.full_support()) {
        return false;
    }
    switch (constraint) {
        case Constraint::kNone:
            return true;
        case Constraint::kWeight4:
            return std::all_of(s.generators().begin(), s.generators().end(),
                               [](const PauliVector &g) { return g.weight() == 4; });
        case Constraint::kCss:
            return is_css(s);
        case Constraint::kCssy:
            return is_cssy(s);
        case Constraint::kLinear:
            return is_linear(s);
    }
    return false;
}

Stabilizer random_stabilizer(int n, int k, Constraint constraint, Rng &rng) {
    if (n < 1 || n > kMaxQubits || k < 0 || k >= n) {
        throw std::invalid_argument("random_stabilizer requires 0 <= k < n <= " + std::to_string(kMaxQubits));
    }
    if (constraint == Constraint::kLinear && (n - k) % 2 != 0) {
        throw InfeasibleConstraint("linear codes need an even number of generators, n - k = " +
                                   std::to_string(n - k));
    }
    for (int attempt = 0; attempt < kRebuildAttempts; attempt++) {
        std::vector<PauliVector> gens;
        if (fill_generators(gens, n, static_cast<std::size_t>(n - k), constraint, rng) &&
            covers_all_qubits(gens, n)) {
            return Stabilizer(std::move(gens), n);
        }
    }
    throw InfeasibleConstraint("no " + constraint_name(constraint) + " [[" + std::to_string(n) + "," +
                               std::to_string(k) + "]] code involving every qubit was found in " +
                               std::to_string(kRebuildAttempts) + " attempts");
}

Stabilizer mutate(const Stabilizer &s, MutationKind kind, Constraint constraint, Rng &rng,
                  const MutationOptions &options) {
    bool perm_allowed = constraint != Constraint::kCss && constraint != Constraint::kCssy;
    switch (kind) {
        case MutationKind::kPermutation:
            if (!perm_allowed) {
                throw std::invalid_argument("permutation mutation is not available under the " +
                                            constraint_name(constraint) + " constraint");
            }
            return permutation_mutation(s, constraint, rng, options);
        case MutationKind::kGenerator:
            return generator_mutation(s, constraint, rng);
        case MutationKind::kCombined: {
            Stabilizer g = generator_mutation(s, constraint, rng);
            return perm_allowed ? permutation_mutation(g, constraint, rng, options) : g;
        }
        case MutationKind::kRandom:
            return random_stabilizer(s.n(), s.k(), constraint, rng);
    }
    throw std::invalid_argument("unknown mutation kind");
}

void SearchConfig::validate() const {
    if (n < 2 || n > kMaxQubits || k < 0 || k >= n) {
        throw std::invalid_argument("need 0 <= k < n <= " + std::to_string(kMaxQubits));
    }
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    if (iterations < 0) {
        throw std::invalid_argument("iterations must be non-negative");
    }
    if (channels.empty()) {
        throw std::invalid_argument("at least one objective channel is required");
    }
    if (!(target_bound > 0.0)) {
        throw std::invalid_argument("target bound must be positive");
    }
    if (!(trace_percentile >= 0.0 && trace_percentile <= 100.0)) {
        throw std::invalid_argument("trace percentile must lie in [0, 100]");
    }
    if (mutation == MutationKind::kPermutation &&
        (constraint == Constraint::kCss || constraint == Constraint::kCssy)) {
        throw std::invalid_argument("permutation mutation is not available under the " +
                                    constraint_name(constraint) + " constraint");
    }
    if (constraint == Constraint::kLinear && (n - k) % 2 != 0) {
        throw InfeasibleConstraint("linear codes need an even number of generators");
    }
}

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("STABOPT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Gf2Word> canonical_form(const Stabilizer &s) { return s.span().rows(); }

double percentile_lowest(std::vector<double> values, double q) {
    if (values.empty()) {
        throw std::invalid_argument("percentile of no values");
    }
    std::sort(values.begin(), values.end());
    double exact = static_cast<double>(values.size()) * (100.0 - q) / 100.0;
    auto rank = static_cast<std::size_t>(std::ceil(exact - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

namespace {

/// Runs fn(i) for i in [0, count) on a pool; rethrows the failure of the
/// lowest index so errors are reported deterministically.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
    std::vector<std::exception_ptr> failures(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, threads)), count);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
}

bool better(double value, const Stabilizer &code, double best_value, const Stabilizer &best_code) {
    if (value != best_value) {
        return value < best_value;
    }
    return canonical_form(code) < canonical_form(best_code);
}

}  // namespace

SearchResult hill_climb(const SearchConfig &config, ErrorSetCache &cache) {
    config.validate();
    std::vector<PauliChannel> channels;
    for (const auto &spec : config.channels) {
        channels.push_back(resolve(spec));
    }
    auto objective = [&](const Stabilizer &s) {
        return geometric_mean_fer(s, channels, FerKind::kSeo, config.target_bound, cache);
    };

    std::vector<std::optional<InstanceResult>> results(static_cast<std::size_t>(config.restarts));
    parallel_for(results.size(), resolve_threads(config.threads), [&](std::size_t i) {
        Rng rng(stream_seed(config.seed, i));
        Stabilizer current = random_stabilizer(config.n, config.k, config.constraint, rng);
        auto cur = objective(current);
        InstanceResult r{current, cur.value, cur.bound, 1.0, 0.0, 0, {}};
        r.objective_trace.reserve(static_cast<std::size_t>(config.iterations) + 1);
        r.objective_trace.push_back(cur.value);
        for (int it = 0; it < config.iterations; it++) {
            std::optional<Stabilizer> candidate;
            for (int t = 0; t < kMutationRetries && !candidate; t++) {
                try {
                    candidate = mutate(current, config.mutation, config.constraint, rng, config.mutation_options);
                } catch (const MutationFailed &) {
                }
            }
            if (candidate) {
                auto next = objective(*candidate);
                if (next.value <= cur.value) {
                    current = std::move(*candidate);
                    cur = std::move(next);
                    r.accepted++;
                    assert(satisfies_constraint(current, config.constraint));
                }
            }
            r.objective_trace.push_back(cur.value);
        }
        r.final_code = current;
        r.objective_seo = cur.value;
        r.objective_bound = cur.bound;
        auto map = geometric_mean_fer(current, channels, FerKind::kMap, config.target_bound, cache);
        r.final_map = map.value;
        r.final_map_bound = map.bound;
        if (!config.record_trace) {
            r.objective_trace.clear();
            r.objective_trace.shrink_to_fit();
        }
        results[i] = std::move(r);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); i++) {
        if (better(results[i]->final_map, results[i]->final_code, results[best]->final_map,
                   results[best]->final_code)) {
            best = i;
        }
    }
    SearchResult out{results[best]->final_code, best, results[best]->objective_seo, results[best]->final_map,
                     results[best]->final_map_bound, {}, {}};
    for (auto &r : results) {
        out.instances.push_back(std::move(*r));
    }
    if (config.record_trace) {
        for (int it = 0; it <= config.iterations; it++) {
            std::vector<double> column;
            for (const auto &r : out.instances) {
                column.push_back(r.objective_trace[static_cast<std::size_t>(it)]);
            }
            out.trace.push_back(percentile_lowest(std::move(column), config.trace_percentile));
        }
    }
    return out;
}

std::vector<RandomSearchEntry> random_search(const SearchConfig &config, int count, FerKind kind,
                                             ErrorSetCache &cache) {
    if (count < 0) {
        throw std::invalid_argument("count must be non-negative");
    }
    std::vector<PauliChannel> channels;
    for (const auto &spec : config.channels) {
        channels.push_back(resolve(spec));
    }
    if (channels.empty()) {
        throw std::invalid_argument("at least one channel is required");
    }
    std::vector<std::optional<RandomSearchEntry>> out(static_cast<std::size_t>(count));
    parallel_for(out.size(), resolve_threads(config.threads), [&](std::size_t i) {
        Rng rng(stream_seed(config.seed, i));
        Stabilizer code = random_stabilizer(config.n, config.k, config.constraint, rng);
        auto gm = geometric_mean_fer(code, channels, kind, config.target_bound, cache);
        out[i] = RandomSearchEntry{std::move(code), gm.value, gm.bound};
    });
    std::vector<RandomSearchEntry> entries;
    for (auto &e : out) {
        entries.push_back(std::move(*e));
    }
    return entries;
}

}  // namespace stabopt
