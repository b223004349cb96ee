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

#ifndef STABOPT_ERRORSET_H
#define STABOPT_ERRORSET_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "stabopt/channel.h"
#include "stabopt/pauli.h"

namespace stabopt {

/// All errors with n_I identities, n_X X's, n_Y Y's and n_Z Z's.
struct CompositionClass {
    int n_i = 0;
    int n_x = 0;
    int n_y = 0;
    int n_z = 0;
    /// Probability of each single member.
    double probability = 0.0;
    /// Number of members, n! / (n_I! n_X! n_Y! n_Z!).
    std::uint64_t size = 0;

    double mass() const { return probability * static_cast<double>(size); }
    friend bool operator==(const CompositionClass &, const CompositionClass &) = default;
};

/// p_I^{n_I} p_X^{n_X} p_Y^{n_Y} p_Z^{n_Z}, always multiplied in that order.
double class_probability(const PauliChannel &channel, int n_i, int n_x, int n_y, int n_z);

/// Every composition of n into four labeled parts, in inclusion order:
/// descending probability, ties broken by (n_I, n_X, n_Y, n_Z) descending.
std::vector<CompositionClass> enumerate_compositions(int n, const PauliChannel &channel);

/// A contiguous run of errors sharing one composition class.
struct ClassRange {
    CompositionClass cls;
    std::size_t offset = 0;
    std::size_t count = 0;
    friend bool operator==(const ClassRange &, const ClassRange &) = default;
};

/// A permutation-invariant set of the most probable errors.
/// Immutable once built; safe to share across threads.
class ErrorSet {
   public:
    int n() const { return n_; }
    const PauliChannel &channel() const { return channel_; }
    /// Packed (u|v) keys, grouped by class in inclusion order.
    std::span<const Gf2Word> errors() const { return errors_; }
    std::size_t size() const { return errors_.size(); }
    const std::vector<ClassRange> &classes() const { return classes_; }
    double retained_mass() const { return retained_mass_; }
    /// 1 - P(E), accumulated from the excluded classes.
    double residual() const { return residual_; }
    bool complete() const { return complete_; }
    /// Smallest per-error probability among members (0 when empty).
    double min_probability() const { return classes_.empty() ? 0.0 : classes_.back().cls.probability; }
    PauliVector error(std::size_t i) const { return PauliVector::from_key(errors_[i], n_); }

    friend bool operator==(const ErrorSet &, const ErrorSet &) = default;

   private:
    friend ErrorSet build_error_set(int, const PauliChannel &, double, std::size_t);
    friend ErrorSet extend_error_set(const ErrorSet &, double, std::size_t);

    int n_ = 0;
    PauliChannel channel_;
    std::vector<CompositionClass> order_;
    std::vector<double> suffix_mass_;
    std::vector<Gf2Word> errors_;
    std::vector<ClassRange> classes_;
    double retained_mass_ = 0.0;
    double residual_ = 1.0;
    bool complete_ = false;
};

inline constexpr std::size_t kUnlimitedErrors = std::numeric_limits<std::size_t>::max();

/// Adds whole classes in inclusion order until residual <= target_residual,
/// then any further classes tied with the last one. Throws BudgetExceeded
/// when the result would hold more than max_errors errors.
ErrorSet build_error_set(int n, const PauliChannel &channel, double target_residual,
                         std::size_t max_errors = kUnlimitedErrors);

/// Same result as build_error_set(e.n(), e.channel(), new_target_residual),
/// reusing the errors already materialized.
ErrorSet extend_error_set(const ErrorSet &e, double new_target_residual, std::size_t max_errors = kUnlimitedErrors);

}  // namespace stabopt

#endif
