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
#include "gymv/harness.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace gymv {

namespace {

// Loop guard for agents that only ever call tools.
constexpr int kMaxIterations = 100000;

}  // namespace

EpisodeRecord run_episode(Agent& agent, const EnvSpec& spec, Seed seed, int rollout, const Registry& registry) {
  EpisodeRecord rec;
  rec.spec = spec;
  rec.seed = seed;
  rec.agent = agent.name();
  rec.rollout = rollout;

  std::unique_ptr<Env> env = make(spec, seed, registry);
  for (const auto& id : env->base().descriptor().agents) rec.returns[id] = 0.0;
  agent.begin_episode(seed, rollout);
  AgentMap<Observation> current = env->reset();

  for (int i = 0; i < kMaxIterations && !env->base().done(); ++i) {
    Transition t;
    try {
      for (const auto& id : env->base().to_move()) {
        t.observations[id] = current.at(id);
        t.actions[id] = agent.act(id, current.at(id), *env);
      }
    } catch (const AgentError& e) {
      rec.error = e.what();
      break;
    }
    t.result = env->step(t.actions);
    for (const auto& [id, r] : t.result.rewards) rec.returns[id] += r;
    for (const auto& [id, o] : t.result.observations) current[id] = o;
    const bool done = t.result.all_done();
    rec.transitions.push_back(std::move(t));
    if (done) break;
  }
  if (!rec.error && !env->base().done()) rec.error = "iteration cap reached";
  double sum = 0;
  for (const auto& [id, r] : rec.returns) sum += r;
  rec.final_score = rec.returns.empty() ? 0.0 : sum / static_cast<double>(rec.returns.size());
  return rec;
}

EpisodeBatch run_episodes(const AgentFactory& factory, const EnvSpec& spec,
                          const std::vector<std::uint64_t>& seeds, int k, int threads,
                          const Registry& registry) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t total = seeds.size() * static_cast<std::size_t>(k);
  EpisodeBatch batch(total);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(1, threads)));
  auto worker = [&](std::size_t w) {
    try {
      auto agent = factory();
      for (std::size_t i = next++; i < total; i = next++) {
        const std::size_t s = i / static_cast<std::size_t>(k);
        const int r = static_cast<int>(i % static_cast<std::size_t>(k));
        batch[i] = run_episode(*agent, spec, Seed{seeds[s]}, r, registry);
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next = total;
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, static_cast<std::size_t>(w));
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return batch;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, int count) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(first + static_cast<std::uint64_t>(i));
  return out;
}

// --- sweeps -------------------------------------------------------------------

namespace {

struct Group {
  std::vector<std::uint64_t> seeds;
  std::map<std::uint64_t, std::vector<double>> scores;  // seed -> rollouts
};

// (env, level) -> scores, seeds sorted so reductions ignore completion order.
std::map<std::pair<std::string, int>, Group> group_batch(const EpisodeBatch& batch) {
  std::map<std::pair<std::string, int>, std::vector<const EpisodeRecord*>> raw;
  for (const auto& rec : batch) raw[{rec.spec.env_id, rec.spec.difficulty}].push_back(&rec);
  std::map<std::pair<std::string, int>, Group> out;
  for (auto& [key, recs] : raw) {
    std::sort(recs.begin(), recs.end(), [](const EpisodeRecord* a, const EpisodeRecord* b) {
      return std::tie(a->seed.value, a->rollout) < std::tie(b->seed.value, b->rollout);
    });
    Group g;
    for (const auto* r : recs) {
      if (!g.scores.count(r->seed.value)) g.seeds.push_back(r->seed.value);
      g.scores[r->seed.value].push_back(r->final_score);
    }
    out.emplace(key, std::move(g));
  }
  return out;
}

std::vector<std::vector<double>> rollouts(const Group& g) {
  std::vector<std::vector<double>> out;
  for (auto s : g.seeds) out.push_back(g.scores.at(s));
  return out;
}

}  // namespace

std::string SweepResult::csv() const {
  std::ostringstream ss;
  ss << "env,level,n,k,acc\n";
  for (const auto& r : rows) {
    ss << r.env << ',' << r.level << ',' << r.n << ',' << r.k << ',' << format_number(r.acc) << '\n';
  }
  return ss.str();
}

SweepResult sweep_from_batch(const EpisodeBatch& batch, int k) {
  SweepResult out;
  for (const auto& [key, g] : group_batch(batch)) {
    SweepRow row;
    row.env = key.first;
    row.level = key.second;
    row.n = static_cast<int>(g.seeds.size());
    row.k = k;
    const auto groups = rollouts(g);
    row.acc = mean_at_k(groups, k);
    for (const auto& grp : groups) {
      row.successes += static_cast<int>(std::count_if(grp.begin(), grp.end(), [](double s) { return s >= 1.0; }));
    }
    out.rows.push_back(row);
  }
  std::map<int, const SweepRow*> by_level;
  for (const auto& r : out.rows) by_level[r.level] = &r;
  if (by_level.count(0) && by_level.count(2)) {
    try {
      out.rho = robustness_ratio(by_level[0]->acc, by_level[2]->acc);
    } catch (const MetricError&) {
    }
  }
  for (auto lo = by_level.begin(); lo != by_level.end(); ++lo) {
    for (auto hi = std::next(lo); hi != by_level.end(); ++hi) {
      const SweepRow& a = *lo->second;
      const SweepRow& b = *hi->second;
      if (significantly_greater(b.successes, b.n * b.k, a.successes, a.n * a.k)) out.non_increasing = false;
    }
  }
  return out;
}

SweepResult difficulty_sweep(const AgentFactory& factory, const std::string& env_id,
                             const std::vector<int>& levels, int n, int k, std::uint64_t first_seed,
                             int threads, const Registry& registry) {
  EpisodeBatch all;
  for (int level : levels) {
    EnvSpec spec;
    spec.env_id = env_id;
    spec.difficulty = level;
    auto batch = run_episodes(factory, spec, seed_range(first_seed, n), k, threads, registry);
    std::move(batch.begin(), batch.end(), std::back_inserter(all));
  }
  return sweep_from_batch(all, k);
}

// --- reports ------------------------------------------------------------------

Json EvalReport::to_json() const {
  Json entries_json = Json::array();
  for (const auto& e : entries) {
    entries_json.push_back(Json{{"env", e.env},
                                {"level", e.level},
                                {"mode", to_string(e.mode)},
                                {"seeds", e.seeds},
                                {"n", e.seeds.size()},
                                {"k", e.k},
                                {"mean_at_k", e.mean_at_k}});
  }
  return Json{{"agent", agent},
              {"k", k},
              {"clip_negatives", clip_negatives},
              {"entries", entries_json},
              {"per_env", per_env},
              {"robustness", robustness}};
}

EvalReport EvalReport::from_json(const Json& j) {
  EvalReport r;
  r.agent = j.at("agent").get<std::string>();
  r.k = j.at("k").get<int>();
  r.clip_negatives = j.at("clip_negatives").get<bool>();
  for (const auto& e : j.at("entries")) {
    EvalEntry entry;
    entry.env = e.at("env").get<std::string>();
    entry.level = e.at("level").get<int>();
    entry.mode = parse_mode(e.at("mode").get<std::string>());
    entry.seeds = e.at("seeds").get<std::vector<std::uint64_t>>();
    entry.k = e.at("k").get<int>();
    entry.mean_at_k = e.at("mean_at_k").get<double>();
    r.entries.push_back(std::move(entry));
  }
  r.per_env = j.at("per_env").get<std::map<std::string, double>>();
  r.robustness = j.at("robustness").get<std::map<std::string, std::string>>();
  return r;
}

EvalReport build_report(const EpisodeBatch& batch, int k, bool clip, const Registry& registry) {
  EvalReport report;
  std::set<std::string> agents;
  for (const auto& rec : batch) agents.insert(rec.agent);
  for (const auto& a : agents) report.agent += (report.agent.empty() ? "" : "+") + a;
  report.k = k;

  std::map<std::string, std::vector<std::vector<double>>> env_groups;
  std::map<std::string, std::map<int, double>> level_acc;
  for (const auto& [key, g] : group_batch(batch)) {
    EvalEntry e;
    e.env = key.first;
    e.level = key.second;
    e.mode = registry.at(e.env).descriptor.mode;
    e.seeds = g.seeds;
    e.k = k;
    const auto groups = rollouts(g);
    e.mean_at_k = mean_at_k(groups, k);
    for (const auto& grp : groups) env_groups[e.env].push_back(grp);
    level_acc[e.env][e.level] = e.mean_at_k;
    report.entries.push_back(std::move(e));
  }
  for (const auto& [env, groups] : env_groups) report.per_env[env] = mean_at_k(groups, k);
  for (const auto& [env, levels] : level_acc) {
    report.robustness[env] =
        levels.count(0) && levels.count(2) ? robustness_text(levels.at(0), levels.at(2)) : "n/a";
  }
  return clip ? clip_negatives(std::move(report)) : report;
}

EvalReport clip_negatives(EvalReport report) {
  report.clip_negatives = true;
  std::set<std::string> multi;
  for (auto& e : report.entries) {
    if (e.mode != Mode::kMultiTurn) continue;
    e.mean_at_k = clip_negative(e.mean_at_k);
    multi.insert(e.env);
  }
  for (auto& [env, v] : report.per_env) {
    if (multi.count(env)) v = clip_negative(v);
  }
  return report;
}

VerifyOutcome verify_report(const EvalReport& report, const EpisodeBatch& batch, const Registry& registry) {
  VerifyOutcome out;
  EvalReport fresh;
  try {
    fresh = build_report(batch, report.k, report.clip_negatives, registry);
  } catch (const std::exception& e) {
    out.ok = false;
    out.problems.push_back(std::string("cannot rebuild report: ") + e.what());
    return out;
  }
  const Json want = fresh.to_json();
  const Json have = report.to_json();
  for (const auto& [key, value] : want.items()) {
    if (!have.contains(key) || have[key] != value) {
      out.ok = false;
      out.problems.push_back("field '" + key + "' differs from the value recomputed from the batch");
    }
  }
  return out;
}

}  // namespace gymv
