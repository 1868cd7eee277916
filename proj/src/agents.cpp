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
#include "gymv/agents.hpp"

#include <regex>

#include "httplib.h"

namespace gymv {

void RandomAgent::begin_episode(Seed seed, int rollout) {
  rng_ = Rng(derive_stream(seed.value, "agent") ^ splitmix64(static_cast<std::uint64_t>(rollout)));
}

std::string RandomAgent::act(const std::string& agent_id, const Observation&, const Env& env) {
  return env.base().game().random_action(agent_id, rng_);
}

std::string OracleAgent::act(const std::string& agent_id, const Observation&, const Env& env) {
  return env.base().game().oracle_action(agent_id);
}

RemoteAgent::RemoteAgent(RemoteAgentConfig config) : config_(std::move(config)) {
  static const std::regex url(R"(^https?://[^/\s]+$)");
  if (!std::regex_match(config_.base_url, url)) {
    throw std::invalid_argument("remote agent base_url must look like http://host:port");
  }
}

Json RemoteAgent::request_body(const Observation& obs) const {
  Json content = Json::array();
  content.push_back(Json{{"type", "text"}, {"text", obs.prompt()}});
  for (const auto& past : obs.history_images) {
    content.push_back(Json{{"type", "image_url"},
                           {"image_url", {{"url", "data:image/png;base64," + png_base64(past)}}}});
  }
  content.push_back(Json{{"type", "image_url"},
                         {"image_url", {{"url", "data:image/png;base64," + png_base64(obs.image)}}}});
  Json messages = Json::array();
  if (!config_.system_prompt.empty()) {
    messages.push_back(Json{{"role", "system"}, {"content", config_.system_prompt}});
  }
  messages.push_back(Json{{"role", "user"}, {"content", content}});
  return Json{{"model", config_.model},
              {"messages", messages},
              {"temperature", config_.temperature},
              {"max_tokens", config_.max_tokens}};
}

std::string RemoteAgent::reply_text(const Json& response) {
  try {
    const Json& message = response.at("choices").at(0).at("message");
    const Json& content = message.at("content");
    if (content.is_string()) return content.get<std::string>();
    std::string text;
    for (const auto& part : content) {
      if (part.value("type", "") == "text") text += part.at("text").get<std::string>();
    }
    return text;
  } catch (const Json::exception& e) {
    throw AgentError(std::string("malformed chat completion: ") + e.what());
  }
}

std::string RemoteAgent::act(const std::string&, const Observation& obs, const Env&) {
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(config_.timeout_s, 0);
  client.set_read_timeout(config_.timeout_s, 0);
  client.set_write_timeout(config_.timeout_s, 0);
  httplib::Headers headers;
  if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);
  auto res = client.Post(config_.path, headers, request_body(obs).dump(), "application/json");
  if (!res) throw AgentError("transport error: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw AgentError("HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
  }
  Json body;
  try {
    body = Json::parse(res->body);
  } catch (const Json::exception& e) {
    throw AgentError(std::string("reply is not JSON: ") + e.what());
  }
  return reply_text(body);
}

AgentFactory agent_factory(const std::string& name, const Json& config) {
  if (name == "random") return [] { return std::make_unique<RandomAgent>(); };
  if (name == "oracle") return [] { return std::make_unique<OracleAgent>(); };
  if (name == "remote") {
    RemoteAgentConfig c;
    c.base_url = config.value("base_url", c.base_url);
    c.path = config.value("path", c.path);
    c.model = config.value("model", c.model);
    c.api_key = config.value("api_key", c.api_key);
    c.temperature = config.value("temperature", c.temperature);
    c.max_tokens = config.value("max_tokens", c.max_tokens);
    c.timeout_s = config.value("timeout_s", c.timeout_s);
    c.system_prompt = config.value("system_prompt", c.system_prompt);
    RemoteAgent probe(c);  // validates eagerly
    (void)probe;
    return [c] { return std::make_unique<RemoteAgent>(c); };
  }
  throw std::invalid_argument("unknown agent '" + name + "' (expected random, oracle or remote)");
}

}  // namespace gymv
