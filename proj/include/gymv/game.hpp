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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gymv/image.hpp"
#include "gymv/parse.hpp"
#include "gymv/render.hpp"
#include "gymv/rng.hpp"
#include "gymv/types.hpp"

namespace gymv {

/// Exact-verification outcome for a single-turn answer.
struct Verdict {
  double score = 0.0;
  bool correct = false;
  std::string detail;

  static Verdict pass() { return {1.0, true, "correct"}; }
  static Verdict fail(std::string detail) { return {0.0, false, std::move(detail)}; }
};

void to_json(Json& j, const Verdict& v);

/// What one agent receives from a transition.
struct AgentOutcome {
  double reward = 0.0;
  std::string feedback;
  Json info = Json::object();
};

struct GameStep {
  /// Agents that appear in the step result; their observations are rebuilt.
  std::map<std::string, AgentOutcome> outcomes;
};

/// Environment dynamics behind the reset/step protocol. Implementations are
/// pure functions of (state, action text, dynamics draws) and never touch the
/// render stream.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::vector<std::string> agents() const { return {kSingleAgent}; }
  /// Agents whose action the next step requires.
  virtual std::vector<std::string> to_move() const { return agents(); }

  virtual RasterImage render(const std::string& agent, const StyleConfig& style,
                             Rng& render_rng) const = 0;
  virtual std::string question(const std::string& agent) const = 0;
  /// Complete textual state description limited to what the image shows.
  virtual std::string caption(const std::string& agent) const = 0;

  virtual GameStep step(const AgentMap<std::string>& actions, Rng& dynamics) = 0;
  virtual bool over() const = 0;

  /// Ground-truth action from the env's own solver.
  virtual std::string oracle_action(const std::string& agent) const = 0;
  /// Uniform draw from the action grammar's plausible range.
  virtual std::string random_action(const std::string& agent, Rng& rng) const = 0;
  /// Canonical state text; equal digests mean equal states.
  virtual std::string state_digest() const = 0;
};

using GameFactory = std::function<std::unique_ptr<Game>(const Json& params, Rng& dynamics)>;

/// Adapts a single-turn task (generator, verifier, captioner, renderer) to the
/// Game protocol: one answer, one verdict, episode over.
///
/// Task requirements:
///   using Instance = ...;
///   static Instance generate(const Json& params, Rng&);
///   static Verdict verify(const Instance&, std::string_view answer);
///   static std::string answer(const Instance&);
///   static std::string question(const Instance&);
///   static std::string caption(const Instance&);
///   static RasterImage render(const Instance&, const StyleConfig&);
///   static std::string random_answer(const Instance&, Rng&);
template <typename Task>
class SingleTurnGame final : public Game {
 public:
  using Instance = typename Task::Instance;

  explicit SingleTurnGame(Instance instance) : instance_(std::move(instance)) {}

  const Instance& instance() const { return instance_; }

  RasterImage render(const std::string&, const StyleConfig& style, Rng&) const override {
    return Task::render(instance_, style);
  }
  std::string question(const std::string&) const override { return Task::question(instance_); }
  std::string caption(const std::string&) const override { return Task::caption(instance_); }

  GameStep step(const AgentMap<std::string>& actions, Rng&) override {
    const std::string& answer = actions.at(kSingleAgent);
    const Verdict verdict = Task::verify(instance_, answer);
    answered_ = true;
    last_answer_ = answer;
    AgentOutcome out;
    out.reward = verdict.score;
    out.feedback = verdict.correct ? "Correct." : "Incorrect (" + verdict.detail + ").";
    out.info["verdict"] = verdict;
    GameStep step;
    step.outcomes[kSingleAgent] = std::move(out);
    return step;
  }
  bool over() const override { return answered_; }

  std::string oracle_action(const std::string&) const override { return Task::answer(instance_); }
  std::string random_action(const std::string&, Rng& rng) const override {
    return Task::random_answer(instance_, rng);
  }
  std::string state_digest() const override {
    return Task::caption(instance_) + (answered_ ? "|answered:" + last_answer_ : "");
  }

 private:
  Instance instance_;
  bool answered_ = false;
  std::string last_answer_;
};

template <typename Task>
GameFactory single_turn_factory() {
  return [](const Json& params, Rng& rng) -> std::unique_ptr<Game> {
    return std::make_unique<SingleTurnGame<Task>>(Task::generate(params, rng));
  };
}

inline constexpr int kMaxGenerationAttempts = 10000;

/// Reject-and-resample loop: calls `attempt` until it yields a value.
/// Throws GymError(kGeneration) after kMaxGenerationAttempts failures.
template <typename Attempt>
auto generate_until_valid(std::string_view what, Attempt&& attempt) {
  for (int i = 0; i < kMaxGenerationAttempts; ++i) {
    if (auto result = attempt()) return std::move(*result);
  }
  throw GymError(ErrorCode::kGeneration,
                 std::string(what) + ": no valid instance after 10000 attempts");
}

/// Reads an integer parameter; throws GymError(kConfig) when absent.
int param_int(const Json& params, std::string_view name);
double param_double(const Json& params, std::string_view name);

}  // namespace gymv
