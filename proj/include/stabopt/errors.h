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

#ifndef STABOPT_ERRORS_H
#define STABOPT_ERRORS_H

#include <limits>
#include <stdexcept>
#include <string>

namespace stabopt {

/// A constrained construction could not be satisfied within its retry budget.
class InfeasibleConstraint : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A mutation exhausted its retries; callers may retry with fresh randomness.
class MutationFailed : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The error-set size limit was hit before the requested accuracy.
/// Carries the best estimate reached so far when one exists.
class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
    BudgetExceeded(const std::string &what, double value, double bound, double residual)
        : std::runtime_error(what), has_estimate(true), best_value(value), best_bound(bound), best_residual(residual) {}

    bool has_estimate = false;
    double best_value = std::numeric_limits<double>::quiet_NaN();
    double best_bound = std::numeric_limits<double>::infinity();
    double best_residual = 1.0;
};

}  // namespace stabopt

#endif
