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
#include "gymv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace gymv {

double mean_at_k(const std::vector<std::vector<double>>& groups, int k) {
  if (k <= 0) throw MetricError("k must be positive");
  if (groups.empty()) throw MetricError("no instances");
  double sum = 0;
  std::size_t n = 0;
  for (const auto& g : groups) {
    if (static_cast<int>(g.size()) != k) {
      throw MetricError("instance has " + std::to_string(g.size()) + " rollouts, expected " + std::to_string(k));
    }
    for (double s : g) sum += s;
    n += g.size();
  }
  return sum / static_cast<double>(n);
}

double robustness_ratio(double acc_d0, double acc_d2) {
  if (!(acc_d0 > 0)) throw MetricError("robustness ratio undefined: accuracy at level 0 is zero");
  return acc_d2 / acc_d0;
}

std::string robustness_text(double acc_d0, double acc_d2, int precision) {
  try {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(precision) << robustness_ratio(acc_d0, acc_d2);
    return ss.str();
  } catch (const MetricError&) {
    return "n/a";
  }
}

double transfer_breadth(const std::vector<double>& deltas) {
  double sum = 0;
  for (double d : deltas) sum += std::max(0.0, d);
  return sum;
}

double clip_negative(double x) { return std::max(0.0, x); }

std::vector<std::vector<double>> TransferMatrix::deltas() const {
  std::vector<std::vector<double>> out;
  for (const auto& row : cells) {
    std::vector<double> d;
    for (std::size_t t = 0; t < row.size(); ++t) d.push_back(row[t] - baseline[t]);
    out.push_back(std::move(d));
  }
  return out;
}

double TransferMatrix::breadth(std::size_t source) const { return transfer_breadth(deltas().at(source)); }

double TransferMatrix::stored_breadth(std::size_t source) const {
  if (!stored_deltas) throw MetricError("matrix carries no stored deltas");
  return transfer_breadth(stored_deltas->at(source));
}

std::size_t TransferMatrix::source_index(const std::string& name) const {
  auto it = std::find(sources.begin(), sources.end(), name);
  if (it == sources.end()) throw MetricError("unknown source '" + name + "'");
  return static_cast<std::size_t>(it - sources.begin());
}

double TransferMatrix::max_delta_gap(std::size_t source) const {
  if (!stored_deltas) throw MetricError("matrix carries no stored deltas");
  const auto computed = deltas().at(source);
  const auto& stored = stored_deltas->at(source);
  double gap = 0;
  for (std::size_t t = 0; t < computed.size(); ++t) gap = std::max(gap, std::abs(computed[t] - stored[t]));
  return gap;
}

TransferMatrix TransferMatrix::from_json(const Json& j) {
  TransferMatrix m;
  try {
    m.sources = j.at("sources").get<std::vector<std::string>>();
    m.targets = j.at("targets").get<std::vector<std::string>>();
    m.baseline = j.at("baseline").get<std::vector<double>>();
    m.cells = j.at("cells").get<std::vector<std::vector<double>>>();
    if (j.contains("deltas")) m.stored_deltas = j["deltas"].get<std::vector<std::vector<double>>>();
  } catch (const Json::exception& e) {
    throw MetricError(std::string("transfer matrix: ") + e.what());
  }
  const std::size_t cols = m.targets.size();
  if (m.baseline.size() != cols) throw MetricError("baseline length differs from target count");
  auto check_rows = [&](const std::vector<std::vector<double>>& rows, const char* what) {
    if (rows.size() != m.sources.size()) throw MetricError(std::string(what) + ": row count differs from sources");
    for (const auto& r : rows) {
      if (r.size() != cols) throw MetricError(std::string(what) + ": ragged row");
    }
  };
  check_rows(m.cells, "cells");
  if (m.stored_deltas) check_rows(*m.stored_deltas, "deltas");
  return m;
}

Json TransferMatrix::to_json() const {
  Json j{{"sources", sources}, {"targets", targets}, {"baseline", baseline}, {"cells", cells}};
  if (stored_deltas) j["deltas"] = *stored_deltas;
  return j;
}

bool significantly_greater(int s_hi, int n_hi, int s_lo, int n_lo, double alpha) {
  if (n_hi <= 0 || n_lo <= 0) throw MetricError("empty sample");
  const double p_hi = static_cast<double>(s_hi) / n_hi;
  const double p_lo = static_cast<double>(s_lo) / n_lo;
  const double pooled = static_cast<double>(s_hi + s_lo) / (n_hi + n_lo);
  const double var = pooled * (1 - pooled) * (1.0 / n_hi + 1.0 / n_lo);
  if (var <= 0) return p_hi > p_lo;
  const double z = (p_hi - p_lo) / std::sqrt(var);
  // Upper-tail p-value of the standard normal.
  const double p_value = 0.5 * std::erfc(z / std::sqrt(2.0));
  return p_value < alpha;
}

}  // namespace gymv
