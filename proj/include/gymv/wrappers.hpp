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

// Presentation and interaction wrappers around an Env. Rules, Caption and
// History only add observation segments; ActionParser canonicalizes actions;
// Tool answers "TOOL: <expr>" actions without stepping the inner env.

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gymv/env.hpp"
#include "gymv/tools.hpp"

namespace gymv {

class Wrapper : public Env {
 public:
  explicit Wrapper(std::unique_ptr<Env> inner) : inner_(std::move(inner)) {}

  AgentMap<Observation> reset() override;
  StepResult step(const AgentMap<std::string>& actions) override;

  const EnvSpec& spec() const override { return inner_->spec(); }
  EnvInstance& base() override { return inner_->base(); }
  const EnvInstance& base() const override { return inner_->base(); }
  Env& inner() { return *inner_; }

 protected:
  /// Hook applied to every observation leaving the wrapper.
  virtual void decorate(const std::string& agent, Observation& obs) = 0;

  std::unique_ptr<Env> inner_;
};

class RulesWrapper final : public Wrapper {
 public:
  RulesWrapper(std::unique_ptr<Env> inner, bool enabled);

 protected:
  void decorate(const std::string& agent, Observation& obs) override;

 private:
  bool enabled_;
};

class CaptionWrapper final : public Wrapper {
 public:
  using Wrapper::Wrapper;

 protected:
  void decorate(const std::string& agent, Observation& obs) override;
};

/// Sliding window "recent-k": each observation carries the min(t, k-1) most
/// recent (observation summary, action) pairs of that agent, t being the
/// number of actions the agent has taken. k = 0 keeps nothing.
class HistoryWrapper final : public Wrapper {
 public:
  HistoryWrapper(std::unique_ptr<Env> inner, int k, bool include_images);

  AgentMap<Observation> reset() override;
  StepResult step(const AgentMap<std::string>& actions) override;

  /// Pairs that the next observation of `agent` will show.
  int visible_pairs(const std::string& agent) const;

 protected:
  void decorate(const std::string& agent, Observation& obs) override;

 private:
  struct Pair {
    std::string summary;
    std::string action;
    RasterImage image;
  };
  struct Pending {
    std::string summary;
    RasterImage image;
  };
  std::string summarize(const std::string& agent, const Observation& obs) const;

  int k_;
  bool include_images_;
  std::map<std::string, std::deque<Pair>> pairs_;
  std::map<std::string, Pending> current_;
};

/// Replaces each action with its canonical grammar form when it parses;
/// unparseable text passes through so the env applies its invalid-action rule.
class ActionParserWrapper final : public Wrapper {
 public:
  using Wrapper::Wrapper;
  StepResult step(const AgentMap<std::string>& actions) override;

 protected:
  void decorate(const std::string&, Observation&) override {}
};

class ToolWrapper final : public Wrapper {
 public:
  static constexpr int kDefaultBudget = 3;

  ToolWrapper(std::unique_ptr<Env> inner, std::unique_ptr<Tool> tool, int budget);

  AgentMap<Observation> reset() override;
  StepResult step(const AgentMap<std::string>& actions) override;

  int calls_this_step() const { return calls_; }

 protected:
  void decorate(const std::string&, Observation&) override {}

 private:
  std::unique_ptr<Tool> tool_;
  int budget_;
  int calls_ = 0;
  std::map<std::string, Observation> last_;
};

/// Wraps `env` with one wrapper built from `config`. Throws
/// GymError(kInvalidSpec) on bad params.
std::unique_ptr<Env> apply_wrapper(std::unique_ptr<Env> env, const WrapperConfig& config);

/// Builds the base env for `spec` and applies its wrappers in declared order
/// (the first listed wrapper sits innermost).
std::unique_ptr<Env> make(const EnvSpec& spec, Seed seed, const Registry& registry = Registry::builtin());

}  // namespace gymv
