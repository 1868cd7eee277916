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
#include "gymv/registry.hpp"

#include <mutex>

namespace gymv {

void to_json(Json& j, const Verdict& v) {
  j = Json{{"score", v.score}, {"correct", v.correct}, {"detail", v.detail}};
}

int param_int(const Json& params, std::string_view name) {
  const std::string key(name);
  if (!params.contains(key) || !params[key].is_number()) {
    throw GymError(ErrorCode::kConfig, "missing integer parameter '" + key + "'");
  }
  return params[key].get<int>();
}

double param_double(const Json& params, std::string_view name) {
  const std::string key(name);
  if (!params.contains(key) || !params[key].is_number()) {
    throw GymError(ErrorCode::kConfig, "missing numeric parameter '" + key + "'");
  }
  return params[key].get<double>();
}

void to_json(Json& j, const EnvDescriptor& d) {
  j = Json{{"env_id", d.env_id},
           {"category", to_string(d.category)},
           {"mode", to_string(d.mode)},
           {"difficulty", d.difficulty},
           {"rules", d.rules},
           {"grammar", to_string(d.grammar)},
           {"grammar_hint", d.grammar_hint},
           {"caption_format", d.caption_format},
           {"rewards", d.rewards},
           {"render", d.render},
           {"agents", d.agents},
           {"max_steps", d.max_steps}};
}

void from_json(const Json& j, EnvDescriptor& d) {
  try {
    d.env_id = j.at("env_id").get<std::string>();
    d.category = parse_category(j.at("category").get<std::string>());
    d.mode = parse_mode(j.at("mode").get<std::string>());
    d.difficulty = j.at("difficulty").get<DifficultyTable>();
    d.rules = j.at("rules").get<std::string>();
    d.grammar = parse_grammar(j.at("grammar").get<std::string>());
    d.grammar_hint = j.value("grammar_hint", std::string{});
    d.caption_format = j.value("caption_format", std::string{});
    d.rewards = j.value("rewards", Json::object());
    d.render = j.value("render", Json::object());
    d.agents = j.value("agents", std::vector<std::string>{kSingleAgent});
    d.max_steps = j.value("max_steps", d.mode == Mode::kSingleTurn ? 1 : 200);
  } catch (const Json::exception& e) {
    throw GymError(ErrorCode::kConfig, std::string("manifest entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw GymError(ErrorCode::kConfig, std::string("manifest entry: ") + e.what());
  }
}

void Registry::register_env(EnvDescriptor descriptor, GameFactory factory) {
  descriptor.difficulty.validate(descriptor.env_id);
  std::unique_lock lock(mutex_);
  if (entries_.count(descriptor.env_id)) {
    throw GymError(ErrorCode::kDuplicateEnv, "env '" + descriptor.env_id + "' already registered");
  }
  std::string id = descriptor.env_id;
  entries_.emplace(std::move(id), Entry{std::move(descriptor), std::move(factory)});
}

bool Registry::contains(const std::string& env_id) const {
  std::shared_lock lock(mutex_);
  return entries_.count(env_id) != 0;
}

Registry::Entry Registry::at(const std::string& env_id) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(env_id);
  if (it == entries_.end()) throw GymError(ErrorCode::kUnknownEnv, "unknown env '" + env_id + "'");
  return it->second;
}

std::vector<EnvDescriptor> Registry::catalog() const {
  std::shared_lock lock(mutex_);
  std::vector<EnvDescriptor> out;
  out.reserve(entries_.size());
  for (const auto& [id, entry] : entries_) out.push_back(entry.descriptor);
  return out;
}

std::size_t Registry::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

Json Registry::manifest() const {
  Json envs = Json::array();
  for (const auto& d : catalog()) envs.push_back(d);
  Json j = builtin_manifest();
  j["envs"] = envs;
  return j;
}

const Registry& Registry::builtin() {
  static const Registry* registry = [] {
    auto* r = new Registry();
    register_builtin_envs(*r, builtin_manifest());
    return r;
  }();
  return *registry;
}

}  // namespace gymv
