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

#include <algorithm>
#include <map>
#include <numeric>

#include "stabopt/pauli.h"

namespace stabopt {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

/// Per-qubit signature: how many group elements of each weight carry X, Y or
/// Z at that qubit. Invariant under qubit relabeling (but not under symbol
/// relabeling, which is not an equivalence here).
std::vector<std::uint64_t> qubit_signatures(const Stabilizer &s) {
    int n = s.n();
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(n * (n + 1) * 3), 0);
    s.for_each_element([&](const PauliVector &e) {
        int w = e.weight();
        for (int q = 0; q < n; q++) {
            int sym = ((e.x >> q) & 1) | (((e.z >> q) & 1) << 1);
            if (sym != 0) {
                counts[static_cast<std::size_t>((q * (n + 1) + w) * 3 + sym - 1)]++;
            }
        }
    });
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(n));
    for (int q = 0; q < n; q++) {
        std::uint64_t h = 0;
        for (int i = 0; i < (n + 1) * 3; i++) {
            h = mix(h, counts[static_cast<std::size_t>(q * (n + 1) * 3 + i)]);
        }
        sig[static_cast<std::size_t>(q)] = h;
    }
    return sig;
}

RowBasis projected_span(const Stabilizer &s, const std::vector<int> &qubits, std::size_t len) {
    RowBasis basis;
    for (const auto &g : s.generators()) {
        Gf2Word w = 0;
        for (std::size_t t = 0; t < len; t++) {
            int q = qubits[t];
            w |= Gf2Word((g.x >> q) & 1) << t;
            w |= Gf2Word((g.z >> q) & 1) << (t + kZOffset);
        }
        basis.insert(w);
    }
    return basis;
}

class EquivalenceSearch {
   public:
    EquivalenceSearch(const Stabilizer &a, const Stabilizer &b)
        : a_(a), b_(b), n_(a.n()), sig_a_(qubit_signatures(a)), sig_b_(qubit_signatures(b)) {
        // Assign the qubits with the fewest candidate images first.
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> candidates(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; i++) {
            for (int j = 0; j < n_; j++) {
                candidates[static_cast<std::size_t>(i)] += sig_a_[static_cast<std::size_t>(i)] == sig_b_[static_cast<std::size_t>(j)];
            }
        }
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return candidates[static_cast<std::size_t>(x)] < candidates[static_cast<std::size_t>(y)];
        });
        image_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
    }

    bool run() {
        auto sa = sig_a_;
        auto sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
            return false;
        }
        return extend(0);
    }

   private:
    bool extend(std::size_t depth) {
        if (depth == static_cast<std::size_t>(n_)) {
            return true;
        }
        int qa = order_[depth];
        for (int qb = 0; qb < n_; qb++) {
            if (used_[static_cast<std::size_t>(qb)] ||
                sig_a_[static_cast<std::size_t>(qa)] != sig_b_[static_cast<std::size_t>(qb)]) {
                continue;
            }
            image_[depth] = qb;
            used_[static_cast<std::size_t>(qb)] = true;
            if (projections_agree(depth + 1) && extend(depth + 1)) {
                return true;
            }
            used_[static_cast<std::size_t>(qb)] = false;
        }
        image_[depth] = -1;
        return false;
    }

    /// The span punctured to the assigned coordinates must agree on both sides.
    bool projections_agree(std::size_t len) const {
        return projected_span(a_, order_, len) == projected_span(b_, image_, len);
    }

    const Stabilizer &a_;
    const Stabilizer &b_;
    int n_;
    std::vector<std::uint64_t> sig_a_;
    std::vector<std::uint64_t> sig_b_;
    std::vector<int> order_;
    std::vector<int> image_;  // image_[t] = qubit of b assigned to order_[t]
    std::vector<bool> used_;
};

}  // namespace

std::vector<std::uint64_t> equivalence_fingerprint(const Stabilizer &s) {
    std::vector<std::uint64_t> fp{static_cast<std::uint64_t>(s.n()), static_cast<std::uint64_t>(s.k())};
    for (auto c : weight_enumerator(s)) {
        fp.push_back(c);
    }
    auto sig = qubit_signatures(s);
    std::sort(sig.begin(), sig.end());
    fp.insert(fp.end(), sig.begin(), sig.end());
    return fp;
}

bool permutation_equivalent(const Stabilizer &a, const Stabilizer &b) {
    if (a.n() != b.n() || a.k() != b.k()) {
        return false;
    }
    if (weight_enumerator(a) != weight_enumerator(b)) {
        return false;
    }
    return EquivalenceSearch(a, b).run();
}

std::vector<int> equivalence_classes(std::span<const Stabilizer> codes) {
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> reps_by_fp;
    std::vector<int> class_of(codes.size(), -1);
    int next_class = 0;
    for (std::size_t i = 0; i < codes.size(); i++) {
        auto &reps = reps_by_fp[equivalence_fingerprint(codes[i])];
        for (std::size_t r : reps) {
            if (permutation_equivalent(codes[r], codes[i])) {
                class_of[i] = class_of[r];
                break;
            }
        }
        if (class_of[i] < 0) {
            class_of[i] = next_class++;
            reps.push_back(i);
        }
    }
    return class_of;
}

}  // namespace stabopt
