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

// Episode runners, difficulty sweeps and evaluation reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gymv/agents.hpp"
#include "gymv/episode.hpp"
#include "gymv/metrics.hpp"
#include "gymv/wrappers.hpp"

namespace gymv {

/// Plays one episode of `spec` (wrappers applied) until done.
EpisodeRecord run_episode(Agent& agent, const EnvSpec& spec, Seed seed, int rollout = 0,
                          const Registry& registry = Registry::builtin());

/// k rollouts per seed, ordered by (seed position, rollout). Each worker
/// thread owns its agent; output order does not depend on `threads`.
EpisodeBatch run_episodes(const AgentFactory& factory, const EnvSpec& spec,
                          const std::vector<std::uint64_t>& seeds, int k = 1, int threads = 1,
                          const Registry& registry = Registry::builtin());

std::vector<std::uint64_t> seed_range(std::uint64_t first, int count);

struct SweepRow {
  std::string env;
  int level = 0;
  int n = 0;
  int k = 1;
  double acc = 0.0;
  /// Rollouts scoring at least 1.0.
  int successes = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// acc(2)/acc(0); empty when undefined.
  std::optional<double> rho;
  /// No later level beats an earlier one at 95% one-sided confidence.
  bool non_increasing = true;

  /// Columns: env,level,n,k,acc
  std::string csv() const;
};

SweepResult difficulty_sweep(const AgentFactory& factory, const std::string& env_id,
                             const std::vector<int>& levels, int n, int k, std::uint64_t first_seed = 0,
                             int threads = 1, const Registry& registry = Registry::builtin());
SweepResult sweep_from_batch(const EpisodeBatch& batch, int k);

struct EvalEntry {
  std::string env;
  int level = 0;
  Mode mode = Mode::kSingleTurn;
  std::vector<std::uint64_t> seeds;
  int k = 1;
  double mean_at_k = 0.0;
};

struct EvalReport {
  std::string agent;
  int k = 1;
  bool clip_negatives = false;
  std::vector<EvalEntry> entries;
  /// Mean@k per env across all its levels.
  std::map<std::string, double> per_env;
  /// acc(2)/acc(0) per env, "n/a" when undefined or levels missing.
  std::map<std::string, std::string> robustness;

  Json to_json() const;
  static EvalReport from_json(const Json& j);
};

/// Aggregates a batch; every number is a function of the batch alone.
EvalReport build_report(const EpisodeBatch& batch, int k, bool clip = false,
                        const Registry& registry = Registry::builtin());
/// Multi-turn values become max(0, x); idempotent.
EvalReport clip_negatives(EvalReport report);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> problems;
};
/// Recomputes `report` from `batch` and lists every mismatch.
VerifyOutcome verify_report(const EvalReport& report, const EpisodeBatch& batch,
                            const Registry& registry = Registry::builtin());

}  // namespace gymv
