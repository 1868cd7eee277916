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

// Agents that turn observations into action text.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "gymv/env.hpp"

namespace gymv {

/// Failure of an agent to produce an action (e.g. transport). Recorded on the
/// episode; never fatal for a batch.
class AgentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;
  /// Called before every episode; rollout distinguishes repeated runs of one seed.
  virtual void begin_episode(Seed seed, int rollout) {
    (void)seed;
    (void)rollout;
  }
  virtual std::string act(const std::string& agent_id, const Observation& obs, const Env& env) = 0;
};

/// Draws from each env's plausible action range with its own seeded stream.
class RandomAgent final : public Agent {
 public:
  std::string name() const override { return "random"; }
  void begin_episode(Seed seed, int rollout) override;
  std::string act(const std::string& agent_id, const Observation& obs, const Env& env) override;

 private:
  Rng rng_;
};

/// Asks the env's own solver.
class OracleAgent final : public Agent {
 public:
  std::string name() const override { return "oracle"; }
  std::string act(const std::string& agent_id, const Observation& obs, const Env& env) override;
};

struct RemoteAgentConfig {
  /// e.g. http://127.0.0.1:8000
  std::string base_url;
  std::string path = "/v1/chat/completions";
  std::string model = "default";
  std::string api_key;
  double temperature = 0.0;
  int max_tokens = 512;
  int timeout_s = 60;
  std::string system_prompt =
      "You are playing a visual environment. Read the image and the text, then reply with your "
      "answer or action in the requested format.";
};

/// OpenAI-style chat-completions client: one user message per step carrying
/// the prompt text and the PNG as a data URI image part.
class RemoteAgent final : public Agent {
 public:
  explicit RemoteAgent(RemoteAgentConfig config);
  std::string name() const override { return "remote"; }
  std::string act(const std::string& agent_id, const Observation& obs, const Env& env) override;

  /// Request body for one observation (exposed for wire tests).
  Json request_body(const Observation& obs) const;
  /// Extracts the reply text; throws AgentError on a malformed body.
  static std::string reply_text(const Json& response);

 private:
  RemoteAgentConfig config_;
};

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

/// "random", "oracle" or "remote" (remote reads base_url/model/... from config).
/// Throws std::invalid_argument for an unknown name.
AgentFactory agent_factory(const std::string& name, const Json& config = Json::object());

}  // namespace gymv
