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

#include "stabopt/errorset.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "stabopt/errors.h"
#include "stabopt/numeric.h"

namespace stabopt {

namespace {

std::uint64_t multinomial(int n, int a, int b, int c, int d) {
    // Built as a product of binomials to stay exact for n <= 16.
    auto binom = [](int top, int choose) {
        std::uint64_t r = 1;
        for (int i = 1; i <= choose; i++) {
            r = r * static_cast<std::uint64_t>(top - choose + i) / static_cast<std::uint64_t>(i);
        }
        return r;
    };
    (void)d;
    return binom(n, a) * binom(n - a, b) * binom(n - a - b, c);
}

double int_pow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; i++) {
        r *= base;
    }
    return r;
}

void append_class(int n, const CompositionClass &cls, std::vector<Gf2Word> &out) {
    // Symbols 0=I, 1=X, 2=Y, 3=Z in ascending order, then every distinct
    // rearrangement via next_permutation.
    std::vector<std::uint8_t> sym;
    sym.reserve(static_cast<std::size_t>(n));
    sym.insert(sym.end(), static_cast<std::size_t>(cls.n_i), 0);
    sym.insert(sym.end(), static_cast<std::size_t>(cls.n_x), 1);
    sym.insert(sym.end(), static_cast<std::size_t>(cls.n_y), 2);
    sym.insert(sym.end(), static_cast<std::size_t>(cls.n_z), 3);
    do {
        Gf2Word key = 0;
        for (int q = 0; q < n; q++) {
            std::uint8_t s = sym[static_cast<std::size_t>(q)];
            if (s == 1 || s == 2) {
                key |= Gf2Word{1} << q;
            }
            if (s == 2 || s == 3) {
                key |= Gf2Word{1} << (q + kZOffset);
            }
        }
        out.push_back(key);
    } while (std::next_permutation(sym.begin(), sym.end()));
}

/// Number of leading classes needed to reach the target, with ties at the
/// boundary pulled in.
std::size_t classes_needed(const std::vector<CompositionClass> &order, const std::vector<double> &suffix,
                           double target) {
    std::size_t m = 0;
    while (m < order.size() && suffix[m] > target) {
        m++;
    }
    while (m > 0 && m < order.size() && order[m].probability == order[m - 1].probability) {
        m++;
    }
    return m;
}

}  // namespace

double class_probability(const PauliChannel &ch, int n_i, int n_x, int n_y, int n_z) {
    double r = int_pow(ch.p_i, n_i);
    r *= int_pow(ch.p_x, n_x);
    r *= int_pow(ch.p_y, n_y);
    r *= int_pow(ch.p_z, n_z);
    return r;
}

std::vector<CompositionClass> enumerate_compositions(int n, const PauliChannel &channel) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("error length must lie in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::vector<CompositionClass> out;
    for (int a = 0; a <= n; a++) {
        for (int b = 0; a + b <= n; b++) {
            for (int c = 0; a + b + c <= n; c++) {
                int d = n - a - b - c;
                out.push_back(CompositionClass{a, b, c, d, class_probability(channel, a, b, c, d),
                                               multinomial(n, a, b, c, d)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CompositionClass &u, const CompositionClass &v) {
        if (u.probability != v.probability) {
            return u.probability > v.probability;
        }
        return std::tie(u.n_i, u.n_x, u.n_y, u.n_z) > std::tie(v.n_i, v.n_x, v.n_y, v.n_z);
    });
    return out;
}

ErrorSet build_error_set(int n, const PauliChannel &channel, double target_residual, std::size_t max_errors) {
    ErrorSet e;
    e.n_ = n;
    e.channel_ = channel;
    e.order_ = enumerate_compositions(n, channel);
    // suffix_mass_[m] = total mass of classes m.., summed smallest first.
    e.suffix_mass_.assign(e.order_.size() + 1, 0.0);
    CompensatedSum acc;
    for (std::size_t i = e.order_.size(); i-- > 0;) {
        acc.add(e.order_[i].mass());
        e.suffix_mass_[i] = acc.value();
    }
    return extend_error_set(e, target_residual, max_errors);
}

ErrorSet extend_error_set(const ErrorSet &base, double new_target_residual, std::size_t max_errors) {
    if (!(new_target_residual > 0.0 && new_target_residual < 1.0)) {
        throw std::invalid_argument("target residual must lie in (0, 1)");
    }
    std::size_t have = base.classes_.size();
    std::size_t want = std::max(have, classes_needed(base.order_, base.suffix_mass_, new_target_residual));
    std::size_t total = base.errors_.size();
    for (std::size_t i = have; i < want; i++) {
        total += static_cast<std::size_t>(base.order_[i].size);
    }
    if (total > max_errors) {
        throw BudgetExceeded("error set of " + std::to_string(total) + " errors exceeds the limit of " +
                             std::to_string(max_errors));
    }
    ErrorSet e = base;
    e.errors_.reserve(total);
    for (std::size_t i = have; i < want; i++) {
        ClassRange range{e.order_[i], e.errors_.size(), static_cast<std::size_t>(e.order_[i].size)};
        append_class(e.n_, e.order_[i], e.errors_);
        e.classes_.push_back(range);
    }
    CompensatedSum retained;
    for (const auto &r : e.classes_) {
        retained.add(r.cls.mass());
    }
    e.retained_mass_ = retained.value();
    e.complete_ = want == e.order_.size();
    e.residual_ = e.complete_ ? 0.0 : e.suffix_mass_[want];
    return e;
}

}  // namespace stabopt
