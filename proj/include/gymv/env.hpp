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

#include <memory>
#include <string>
#include <vector>

#include "gymv/game.hpp"
#include "gymv/registry.hpp"
#include "gymv/render.hpp"
#include "gymv/rng.hpp"
#include "gymv/types.hpp"

namespace gymv {

class EnvInstance;

/// The reset/step protocol shared by base environments and wrappers.
/// Single-threaded: callers must not step one Env concurrently.
class Env {
 public:
  virtual ~Env() = default;

  virtual AgentMap<Observation> reset() = 0;
  /// Throws GymError(kStepAfterDone), GymError(kMissingAction) or
  /// GymError(kOffTurnAction).
  virtual StepResult step(const AgentMap<std::string>& actions) = 0;

  virtual const EnvSpec& spec() const = 0;
  virtual EnvInstance& base() = 0;
  virtual const EnvInstance& base() const = 0;
};

inline constexpr int kDefaultMultiTurnBudget = 200;

/// Seeded, difficulty-parameterized environment: the innermost Env of every
/// wrapper stack.
class EnvInstance final : public Env {
 public:
  EnvInstance(EnvSpec spec, Seed seed, Registry::Entry entry);

  AgentMap<Observation> reset() override;
  StepResult step(const AgentMap<std::string>& actions) override;

  const EnvSpec& spec() const override { return spec_; }
  EnvInstance& base() override { return *this; }
  const EnvInstance& base() const override { return *this; }

  Seed seed() const { return seed_; }
  const EnvDescriptor& descriptor() const { return entry_.descriptor; }
  const Json& params() const { return params_; }
  const StyleConfig& style() const { return style_; }
  const Game& game() const;
  int step_count() const { return steps_; }
  int budget() const { return budget_; }
  bool done() const { return done_; }
  std::vector<std::string> to_move() const;

  /// Renders the current state for `agent` from the render stream; never
  /// perturbs dynamics.
  RasterImage render(const std::string& agent) const;
  /// Observation for `agent` carrying the image, Question and optional Feedback.
  Observation observe(const std::string& agent, const std::string& feedback = {}) const;

 private:
  EnvSpec spec_;
  Seed seed_;
  Registry::Entry entry_;
  Json params_;
  StyleConfig style_;
  int budget_ = 1;
  std::unique_ptr<Game> game_;
  Rng dynamics_;
  int steps_ = 0;
  bool done_ = false;
};

/// Resolves `spec` against `registry` and builds the unwrapped instance.
/// Throws GymError(kUnknownEnv), GymError(kUnknownLevel) or
/// GymError(kInvalidSpec).
std::unique_ptr<EnvInstance> make_instance(const EnvSpec& spec, Seed seed,
                                           const Registry& registry = Registry::builtin());

}  // namespace gymv
