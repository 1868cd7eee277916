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
// Acceptance checks. Prints one "PASS <name>: ..." or "FAIL <name>: ..." line
// per criterion. With a name argument only that criterion runs.
// Exit status is non-zero when any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "agreement.hpp"
#include "gymv/envs/multiturn.hpp"
#include "gymv/harness.hpp"
#include "laws.hpp"
#include "transport.hpp"

namespace gymv::test {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 3) {
  std::ostringstream ss;
  ss.precision(digits);
  ss << std::fixed << v;
  return ss.str();
}

std::string first_example(const std::vector<std::string>& ex) { return ex.empty() ? "" : "; e.g. " + ex.front(); }

std::vector<std::string> all_envs() {
  std::vector<std::string> ids;
  for (const auto& d : Registry::builtin().catalog()) ids.push_back(d.env_id);
  return ids;
}

const std::vector<std::string> kMultiTurn = {"sokoban", "frozenlake", "game2048", "minesweeper", "tictactoe"};

// Oracle runs twice over 3 levels x 20 seeds of every env; the serialized
// batches, PNG bytes included, must be identical.
Outcome determinism() {
  int envs = 0;
  std::vector<std::string> diverged;
  std::size_t bytes = 0;
  for (const auto& id : all_envs()) {
    for (int level = 0; level < 3; ++level) {
      const auto spec = spec_for(id, level);
      const auto a = batch_to_jsonl(run_episodes(agent_factory("oracle"), spec, seed_range(0, 20)));
      const auto b = batch_to_jsonl(run_episodes(agent_factory("oracle"), spec, seed_range(0, 20)));
      bytes += a.size();
      if (a != b) diverged.push_back(id + " L" + std::to_string(level));
    }
    ++envs;
  }
  return {diverged.empty(), std::to_string(envs) + " envs x 3 levels x 20 seeds, " + std::to_string(bytes) +
                                " serialized bytes per run, " + std::to_string(diverged.size()) + " diverging groups" +
                                first_example(diverged)};
}

Outcome verifier_oracle() {
  Agreement total;
  for (const auto& id : single_turn_envs()) {
    total.merge(check_agreement(id, 0, 0, 1000));
    total.merge(check_agreement(id, 2, 0, 200));
  }
  return {total.disagreements == 0 && total.instances == 12 * 1200,
          std::to_string(total.instances) + " instances, " + std::to_string(total.candidates) + " candidate answers, " +
              std::to_string(total.disagreements) + " disagreements" + first_example(total.examples)};
}

Outcome solvability() {
  Tally t;
  const std::string solo(kSingleAgent);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int level = static_cast<int>(seed % 3);
    for (const auto& id : single_turn_envs()) {
      auto env = make(spec_for(id, level), Seed{seed});
      env->reset();
      AgentMap<std::string> a;
      a[solo] = env->base().game().oracle_action(solo);
      t.expect(env->step(a).rewards.at(solo) == 1.0, id + " seed " + std::to_string(seed) + ": ground truth rejected");
    }
    {
      auto env = make(spec_for("sokoban", level), Seed{seed});
      env->reset();
      const auto& game = dynamic_cast<const envs::Sokoban&>(env->base().game());
      auto board = oracle::SokobanBoard::parse(game.text_rows());
      for (int d : game.plan()) board.move(std::string(envs::kDirectionNames[static_cast<std::size_t>(d)]));
      t.expect(!game.plan().empty() && board.solved(), "sokoban seed " + std::to_string(seed) + ": plan does not solve");
    }
    {
      auto env = make(spec_for("frozenlake", level), Seed{seed});
      env->reset();
      t.expect(oracle::lake_reachable(oracle::caption_rows(env->base().game().caption(solo))),
               "frozenlake seed " + std::to_string(seed) + ": goal unreachable");
    }
    {
      auto env = make(spec_for("minesweeper", level), Seed{seed});
      env->reset();
      const auto& m = dynamic_cast<const envs::Minesweeper&>(env->base().game());
      Rng pick(seed ^ 0x5eed);
      AgentMap<std::string> a;
      a[solo] = "reveal " + std::to_string(pick.index(static_cast<std::size_t>(m.side()))) + " " +
                std::to_string(pick.index(static_cast<std::size_t>(m.side())));
      env->step(a);
      t.expect(!m.exploded(), "minesweeper seed " + std::to_string(seed) + ": first reveal hit a mine");
    }
  }
  return {t.failures == 0, std::to_string(t.checks) + " checks over 1000 seeds (12 single-turn + sokoban, frozenlake, "
                                                       "minesweeper), " +
                               std::to_string(t.failures) + " failures" + first_example(t.examples)};
}

// Breadths and deltas recomputed from the fixture cells.
Outcome fixture_breadth() {
  std::ifstream in(std::string(GYMV_SOURCE_DIR) + "/tests/fixtures/transfer_matrix.json");
  const auto m = TransferMatrix::from_json(Json::parse(in));
  const auto cog = m.source_index("Cognition");
  const auto geo = m.source_index("Geometry");
  const double b_cog = m.breadth(cog);
  const double b_geo = m.breadth(geo);
  const bool breadth_ok = std::abs(b_cog - 33.1) < 1e-9 && std::abs(b_geo - 17.1) < 1e-9;
  const double gap = std::max(m.max_delta_gap(cog), m.max_delta_gap(geo));
  const bool deltas_ok = gap <= 0.05 + 1e-9;
  return {breadth_ok && deltas_ok,
          "breadth from cells Cognition " + fmt(b_cog, 1) + " (want 33.1), Geometry " + fmt(b_geo, 1) +
              " (want 17.1); largest delta gap vs stored deltas " + fmt(gap, 2) + " (tolerance 0.05); breadth "
              "from stored deltas " + fmt(m.stored_breadth(cog), 1) + " / " + fmt(m.stored_breadth(geo), 1) +
              ". Fixture cells are rounded to 0.1, so cell differences cannot recover every stored delta"};
}

Outcome rho() {
  const double r = robustness_ratio(1.00, 0.13);
  bool guarded = false;
  try {
    robustness_ratio(0.0, 0.5);
  } catch (const MetricError&) {
    guarded = true;
  }
  return {std::abs(r - 0.13) < 1e-12 && guarded && robustness_text(0.0, 0.5) == "n/a",
          "rho(1.00, 0.13) = " + fmt(r, 2) + ", acc_d0 = 0 " + (guarded ? "raises" : "does NOT raise")};
}

Outcome wrapper_laws() {
  Tally presentation;
  Tally history;
  Tally tools;
  for (const auto& id : all_envs()) {
    presentation.merge(presentation_invariance(id, 50));
    history.merge(history_counts(id, id.size() && std::count(kMultiTurn.begin(), kMultiTurn.end(), id) ? 10 : 3));
  }
  for (const auto& id : kMultiTurn) tools.merge(tool_audit(id, 1, 3));
  const bool ok = presentation.failures == 0 && history.failures == 0 && tools.failures == 0;
  std::vector<std::string> ex = presentation.examples;
  ex.insert(ex.end(), history.examples.begin(), history.examples.end());
  ex.insert(ex.end(), tools.examples.begin(), tools.examples.end());
  return {ok, "presentation " + std::to_string(presentation.checks) + " replays/" +
                  std::to_string(presentation.failures) + " diverged; history " + std::to_string(history.checks) +
                  " steps/" + std::to_string(history.failures) + " wrong counts; tool audit " +
                  std::to_string(tools.checks) + " checks/" + std::to_string(tools.failures) + " failures" +
                  first_example(ex)};
}

struct LocalService {
  std::unique_ptr<Service> service;
  std::string url;
  explicit LocalService(ServiceConfig cfg = {}) {
    cfg.port = 0;
    service = std::make_unique<Service>(cfg);
    url = "http://127.0.0.1:" + std::to_string(service->start());
  }
  ~LocalService() { service->stop(); }
};

Outcome transport() {
  LocalService svc;
  Tally t;
  int episodes = 0;
  for (const auto& id : kMultiTurn) {
    t.merge(transport_parity(svc.url, id, 50));
    episodes += 50;
  }
  return {t.failures == 0, std::to_string(episodes) + " episodes, " + std::to_string(t.checks) +
                               " compared payloads, " + std::to_string(t.failures) + " mismatches" +
                               first_example(t.examples)};
}

// 256 distinct requests across the three scorers.
std::vector<RewardRequest> reward_mix() {
  std::vector<RewardRequest> out;
  const std::string solo(kSingleAgent);
  for (int i = 0; i < 256; ++i) {
    const auto seed = static_cast<std::uint64_t>(i);
    RewardRequest r;
    switch (i % 3) {
      case 0: {
        const auto inst = make_instance_of<envs::LargestIsland>("largest_island", i % 2, seed);
        r.model = "grid_match";
        Json cells = Json::array();
        for (int row = 0; row < inst.grid.rows(); ++row) {
          Json line = Json::array();
          for (int c = 0; c < inst.grid.cols(); ++c) {
            // Every seventh request carries one wrong cell, for non-trivial scores.
            const bool flip = i % 7 == 0 && row == 0 && c == 0;
            line.push_back((inst.grid(row, c) != 0) != flip ? "land" : "water");
          }
          cells.push_back(line);
        }
        r.image_base64 = png_base64(envs::LargestIsland::render(inst, StyleConfig{}));
        r.metadata = Json{{"cells", cells}};
        break;
      }
      case 1: {
        const EnvSpec spec = spec_for(i % 2 ? "sokoban" : "game2048", 0);
        auto env = make(spec, Seed{seed});
        env->reset();
        Rng rng(seed);
        Json actions = Json::array();
        for (int s = 0; s < i % 5 && !env->base().done(); ++s) {
          AgentMap<std::string> a;
          a[solo] = env->base().game().random_action(solo, rng);
          env->step(a);
          actions.push_back(Json{{solo, a.at(solo)}});
        }
        r.model = "render_match";
        r.image_base64 = png_base64(env->base().render(solo));
        // Odd requests claim one step too few, so the picture only partly matches.
        if (i % 4 == 1 && !actions.empty()) actions.erase(actions.size() - 1);
        r.metadata = Json{{"spec", spec}, {"seed", seed}, {"actions", actions}};
        break;
      }
      default: {
        const auto inst = make_instance_of<envs::RottenOranges>("rotten_oranges", 0, seed);
        r.model = "answer_verify";
        r.prompt = "Answer: " + std::to_string(envs::RottenOranges::solve(inst.grid) + (i % 2));
        r.metadata = Json{{"env_id", "rotten_oranges"}, {"difficulty", 0}, {"seed", seed}};
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Outcome batching() {
  const auto requests = reward_mix();
  std::vector<double> sequential;
  for (const auto& r : requests) sequential.push_back(make_scorer(r.model)->score(r).score);

  ServiceConfig cfg;
  LocalService svc(cfg);
  std::vector<std::future<double>> futures;
  futures.reserve(requests.size());
  for (const auto& r : requests) {
    futures.push_back(std::async(std::launch::async, [&svc, body = r.to_json().dump()] {
      httplib::Client c(svc.url);
      c.set_read_timeout(120, 0);
      auto res = c.Post("/v1/generate", body, "application/json");
      if (!res || res->status != 200) return -1.0;
      return Json::parse(res->body).at("score").get<double>();
    }));
  }
  int mismatches = 0;
  for (std::size_t i = 0; i < futures.size(); ++i) mismatches += futures[i].get() != sequential[i];

  httplib::Client c(svc.url);
  const Json stats = Json::parse(c.Get("/v1/stats")->body).at("scorers");
  // Added latency = time in the pipeline minus time the scorer spent busy.
  const double budget_ms = cfg.linger_ms + 10.0;
  double worst = 0.0;
  int largest = 0;
  std::string per;
  for (const auto& [name, s] : stats.items()) {
    worst = std::max(worst, s.at("p99_excess_ms").get<double>());
    largest = std::max(largest, s.at("largest_batch").get<int>());
    per += " " + name + "=" + fmt(s.at("p99_excess_ms").get<double>(), 1) + "ms/" +
           std::to_string(s.at("batches").get<int>()) + " batches";
  }
  const bool ok = mismatches == 0 && worst <= budget_ms;
  return {ok, std::to_string(requests.size()) + " concurrent requests, " + std::to_string(mismatches) +
                  " score mismatches vs sequential; largest batch " + std::to_string(largest) +
                  "; p99 added latency" + per + " (budget " + fmt(budget_ms, 0) + "ms)"};
}

Outcome difficulty_cliff() {
  int monotone = 0;
  bool oracle_flat = true;
  std::string per;
  std::vector<std::string> not_flat;
  for (const auto& id : single_turn_envs()) {
    const auto random = difficulty_sweep(agent_factory("random"), id, {0, 1, 2}, 500, 1);
    const auto oracle = difficulty_sweep(agent_factory("oracle"), id, {0, 1, 2}, 500, 1);
    monotone += random.non_increasing;
    for (const auto& row : oracle.rows) {
      if (row.acc != 1.0) {
        oracle_flat = false;
        not_flat.push_back(id + " L" + std::to_string(row.level));
      }
    }
    per += " " + id + "=" + fmt(random.rows[0].acc, 2) + "/" + fmt(random.rows[1].acc, 2) + "/" +
           fmt(random.rows[2].acc, 2) + (random.non_increasing ? "" : "(!)");
  }
  return {monotone >= 10 && oracle_flat,
          std::to_string(monotone) + "/12 envs non-increasing for the random agent (need 10); oracle " +
              (oracle_flat ? "1.0 everywhere" : "below 1.0 at " + not_flat.front()) + ";" + per};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"determinism", determinism},
      {"verifier_oracle", verifier_oracle},
      {"solvability", solvability},
      {"transfer_breadth", fixture_breadth},
      {"rho", rho},
      {"wrapper_laws", wrapper_laws},
      {"transport", transport},
      {"batching", batching},
      {"difficulty_cliff", difficulty_cliff},
  };
  return list;
}

}  // namespace
}  // namespace gymv::test

int main(int argc, char** argv) {
  using namespace gymv::test;
  const std::string only = argc > 1 ? argv[1] : "";
  bool any = false;
  bool all_pass = true;
  for (const auto& [name, run] : criteria()) {
    if (!only.empty() && only != name) continue;
    any = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return all_pass ? 0 : 1;
}
