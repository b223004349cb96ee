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

#include "stabopt/fer.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "stabopt/errors.h"

namespace stabopt {

namespace {

constexpr int kMaxCosetBits = 26;
constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct Bucket {
    std::uint32_t map_choice = 0;
    std::uint32_t se_choice = 0;
    bool used = false;
};

/// Scratch space reused across evaluations on one thread. Every touched
/// slot is reset before the evaluation returns.
struct Workspace {
    std::vector<std::uint32_t> count;
    std::vector<std::uint8_t> seen;
    std::vector<double> mass;
    std::vector<double> first;
    std::vector<double> rest;
    std::vector<std::uint32_t> syndrome;
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> class_touched;
    std::vector<Bucket> buckets;
    std::vector<std::uint32_t> used_buckets;
    std::vector<double> terms;

    void reserve(std::size_t cosets, std::size_t syndromes) {
        if (count.size() < cosets) {
            count.assign(cosets, 0);
            seen.assign(cosets, 0);
            mass.resize(cosets);
            first.resize(cosets);
            rest.resize(cosets);
            syndrome.resize(cosets);
        }
        if (buckets.size() < syndromes) {
            buckets.assign(syndromes, Bucket{});
        }
    }
};

struct Tallies {
    std::size_t syndromes = 0;
    double map_value = 1.0;
    double se_value = 1.0;
    double seo_value = 1.0;
};

double sorted_sum(std::vector<double> &terms) {
    // Ascending order makes the result independent of coset labels and
    // monotone in each term.
    std::sort(terms.begin(), terms.end());
    long double acc = 0.0L;
    for (double t : terms) {
        acc += t;
    }
    return std::min(1.0, static_cast<double>(acc));
}

Tallies tally(const Stabilizer &s, const ErrorSet &e) {
    if (s.n() != e.n()) {
        throw std::invalid_argument("error set length differs from the code length");
    }
    int bits = s.coset_index_bits();
    if (bits > kMaxCosetBits) {
        throw std::invalid_argument("code has too many cosets to tabulate");
    }
    thread_local Workspace ws;
    ws.reserve(std::size_t{1} << bits, std::size_t{1} << s.num_generators());
    ws.touched.clear();
    auto keys = e.errors();
    for (const auto &range : e.classes()) {
        double p = range.cls.probability;
        ws.class_touched.clear();
        for (std::size_t i = range.offset; i < range.offset + range.count; i++) {
            std::uint32_t ci = s.coset_index(keys[i]);
            if (ws.count[ci]++ == 0) {
                ws.class_touched.push_back(ci);
            }
        }
        for (std::uint32_t ci : ws.class_touched) {
            double c = static_cast<double>(ws.count[ci]);
            ws.count[ci] = 0;
            if (!ws.seen[ci]) {
                ws.seen[ci] = 1;
                ws.touched.push_back(ci);
                ws.first[ci] = p;
                ws.mass[ci] = c * p;
                ws.rest[ci] = (c - 1.0) * p;
                ws.syndrome[ci] = s.syndrome_bits(s.coset_key_from_index(ci));
            } else {
                ws.mass[ci] += c * p;
                ws.rest[ci] += c * p;
            }
        }
    }

    ws.used_buckets.clear();
    for (std::uint32_t ci : ws.touched) {
        Bucket &b = ws.buckets[ws.syndrome[ci]];
        if (!b.used) {
            b = Bucket{ci, ci, true};
            ws.used_buckets.push_back(ws.syndrome[ci]);
            continue;
        }
        double m = ws.mass[ci];
        double bm = ws.mass[b.map_choice];
        if (m > bm || (m == bm && ci < b.map_choice)) {
            b.map_choice = ci;
        }
        // Most probable single error; among equally probable ones, the
        // heavier coset, then the smaller canonical representative.
        std::uint32_t o = b.se_choice;
        if (ws.first[ci] > ws.first[o] ||
            (ws.first[ci] == ws.first[o] && (m > ws.mass[o] || (m == ws.mass[o] && ci < o)))) {
            b.se_choice = ci;
        }
    }

    Tallies t;
    t.syndromes = ws.used_buckets.size();
    double residual = e.residual();

    ws.terms.assign(1, residual);
    for (std::uint32_t ci : ws.touched) {
        if (ws.buckets[ws.syndrome[ci]].map_choice != ci) {
            ws.terms.push_back(ws.mass[ci]);
        }
    }
    t.map_value = sorted_sum(ws.terms);

    ws.terms.assign(1, residual);
    for (std::uint32_t ci : ws.touched) {
        if (ws.buckets[ws.syndrome[ci]].se_choice != ci) {
            ws.terms.push_back(ws.mass[ci]);
        }
    }
    t.se_value = sorted_sum(ws.terms);

    for (std::uint32_t syn : ws.used_buckets) {
        ws.terms.push_back(ws.rest[ws.buckets[syn].se_choice]);
    }
    t.seo_value = sorted_sum(ws.terms);

    for (std::uint32_t ci : ws.touched) {
        ws.seen[ci] = 0;
    }
    for (std::uint32_t syn : ws.used_buckets) {
        ws.buckets[syn] = Bucket{};
    }
    return t;
}

double ratio_bound(double slack, double value) {
    if (slack == 0.0) {
        return 0.0;
    }
    double denom = value - slack;
    return denom > 0.0 ? slack / denom : kUnbounded;
}

FerEstimate make_estimate(const Stabilizer &s, const ErrorSet &e, FerKind kind, const Tallies &t) {
    FerEstimate est;
    est.kind = kind;
    est.residual = e.residual();
    est.syndromes = t.syndromes;
    est.error_count = e.size();
    est.complete = e.complete();
    switch (kind) {
        case FerKind::kMap:
            est.value = t.map_value;
            est.bound = ratio_bound(est.residual, est.value);
            break;
        case FerKind::kSe:
            est.value = t.se_value;
            est.bound = ratio_bound(est.residual, est.value);
            break;
        case FerKind::kSeo: {
            est.value = t.seo_value;
            double missing = std::ldexp(1.0, s.num_generators()) - static_cast<double>(t.syndromes);
            est.alpha = missing * e.min_probability();
            est.bound = ratio_bound(std::min(est.residual, est.alpha), est.value);
            break;
        }
    }
    return est;
}

}  // namespace

std::string kind_name(FerKind kind) {
    switch (kind) {
        case FerKind::kMap:
            return "map";
        case FerKind::kSe:
            return "se";
        case FerKind::kSeo:
            return "seo";
    }
    return "?";
}

FerKind parse_kind(std::string_view text) {
    if (text == "map") {
        return FerKind::kMap;
    }
    if (text == "se") {
        return FerKind::kSe;
    }
    if (text == "seo") {
        return FerKind::kSeo;
    }
    throw std::invalid_argument("unknown estimator '" + std::string(text) + "' (expected map, se or seo)");
}

FerEstimate fer_estimate(const Stabilizer &s, const ErrorSet &e, FerKind kind) {
    return make_estimate(s, e, kind, tally(s, e));
}

FerEstimate fer_map(const Stabilizer &s, const ErrorSet &e) { return fer_estimate(s, e, FerKind::kMap); }
FerEstimate fer_se(const Stabilizer &s, const ErrorSet &e) { return fer_estimate(s, e, FerKind::kSe); }
FerEstimate fer_seo(const Stabilizer &s, const ErrorSet &e) { return fer_estimate(s, e, FerKind::kSeo); }

std::size_t ErrorSetCache::default_max_errors() {
    if (const char *env = std::getenv("STABOPT_MAX_ERRORS")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return std::size_t{1} << 25;
}

std::shared_ptr<const ErrorSet> ErrorSetCache::get(int n, const PauliChannel &channel, int decade) {
    if (decade < 1) {
        throw std::invalid_argument("decade must be at least 1");
    }
    std::shared_ptr<Entry> entry;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto &slot = entries_[Key{n, channel.p_i, channel.p_x, channel.p_y, channel.p_z, decade}];
        if (!slot) {
            slot = std::make_shared<Entry>();
        }
        entry = slot;
    }
    std::lock_guard<std::mutex> lock(entry->mu);
    if (!entry->set) {
        double target = std::pow(10.0, -decade);
        if (decade == 1) {
            entry->set = std::make_shared<const ErrorSet>(build_error_set(n, channel, target, max_errors_));
        } else {
            auto prev = get(n, channel, decade - 1);
            entry->set = prev->complete()
                             ? prev
                             : std::make_shared<const ErrorSet>(extend_error_set(*prev, target, max_errors_));
        }
    }
    return entry->set;
}

FerEstimate fer_adaptive(const Stabilizer &s, const PauliChannel &channel, FerKind kind, double target_bound,
                         ErrorSetCache &cache) {
    if (!(target_bound > 0.0)) {
        throw std::invalid_argument("target bound must be positive");
    }
    FerEstimate best;
    bool have = false;
    for (int decade = 1;; decade++) {
        std::shared_ptr<const ErrorSet> e;
        try {
            if (decade > 300) {
                throw BudgetExceeded("residual refinement did not converge");
            }
            e = cache.get(s.n(), channel, decade);
        } catch (const BudgetExceeded &ex) {
            if (have) {
                throw BudgetExceeded(ex.what(), best.value, best.bound, best.residual);
            }
            throw;
        }
        best = fer_estimate(s, *e, kind);
        have = true;
        if (best.bound <= target_bound || e->complete()) {
            return best;
        }
    }
}

FerEstimate fer_adaptive(const Stabilizer &s, const ChannelSpec &spec, FerKind kind, double target_bound,
                         ErrorSetCache &cache) {
    return fer_adaptive(s, resolve(spec), kind, target_bound, cache);
}

double geometric_mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("geometric mean of no values");
    }
    if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; })) {
        return values[0];
    }
    long double log_sum = 0.0L;
    for (double v : values) {
        if (v <= 0.0) {
            return 0.0;
        }
        log_sum += std::log(static_cast<long double>(v));
    }
    return static_cast<double>(std::exp(log_sum / static_cast<long double>(values.size())));
}

GeometricMeanFer geometric_mean_fer(const Stabilizer &s, std::span<const PauliChannel> channels, FerKind kind,
                                    double target_bound, ErrorSetCache &cache) {
    if (channels.empty()) {
        throw std::invalid_argument("at least one channel is required");
    }
    GeometricMeanFer out;
    std::vector<double> values;
    out.bound = 0.0;
    for (const auto &ch : channels) {
        out.per_channel.push_back(fer_adaptive(s, ch, kind, target_bound, cache));
        values.push_back(out.per_channel.back().value);
        out.bound = std::max(out.bound, out.per_channel.back().bound);
    }
    out.value = geometric_mean(values);
    return out;
}

GeometricMeanFer geometric_mean_fer(const Stabilizer &s, std::span<const ChannelSpec> specs, FerKind kind,
                                    double target_bound, ErrorSetCache &cache) {
    std::vector<PauliChannel> channels;
    for (const auto &spec : specs) {
        channels.push_back(resolve(spec));
    }
    return geometric_mean_fer(s, channels, kind, target_bound, cache);
}

}  // namespace stabopt
