// Copyright 2026 The gymv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Score reductions: mean@k, robustness ratio, transfer breadth and matrix,
// and the one-sided comparison used by difficulty sweeps.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gymv/types.hpp"

namespace gymv {

class MetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mean over every rollout of every instance. Throws MetricError unless each
/// group holds exactly k scores.
double mean_at_k(const std::vector<std::vector<double>>& groups, int k);

/// acc_d2 / acc_d0. Throws MetricError when acc_d0 <= 0 (undefined).
double robustness_ratio(double acc_d0, double acc_d2);
/// "n/a" when undefined, otherwise the ratio to the given precision.
std::string robustness_text(double acc_d0, double acc_d2, int precision = 2);

/// Sum of positive deltas.
double transfer_breadth(const std::vector<double>& deltas);

/// Max(0, x).
double clip_negative(double x);

/// Rows are training sources, columns evaluation targets.
struct TransferMatrix {
  std::vector<std::string> sources;
  std::vector<std::string> targets;
  std::vector<double> baseline;
  std::vector<std::vector<double>> cells;
  /// Deltas as stored with the matrix (e.g. the published subscripts), if any.
  std::optional<std::vector<std::vector<double>>> stored_deltas;

  /// cells - baseline, row by row.
  std::vector<std::vector<double>> deltas() const;
  double breadth(std::size_t source) const;
  /// Breadth from the stored deltas; throws MetricError when none are stored.
  double stored_breadth(std::size_t source) const;
  std::size_t source_index(const std::string& name) const;
  /// Largest |computed - stored| delta in a row.
  double max_delta_gap(std::size_t source) const;

  /// Throws MetricError on ragged or mis-sized input.
  static TransferMatrix from_json(const Json& j);
  Json to_json() const;
};

/// One-sided two-proportion z-test: true when the rate of `hi` exceeds the
/// rate of `lo` at significance `alpha`.
bool significantly_greater(int successes_hi, int n_hi, int successes_lo, int n_lo, double alpha = 0.05);

}  // namespace gymv
