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

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "gymv/game.hpp"
#include "gymv/parse.hpp"
#include "gymv/types.hpp"

namespace gymv {

/// Catalog metadata for one environment, loaded from the manifest.
struct EnvDescriptor {
  std::string env_id;
  Category category = Category::kAlgorithmic;
  Mode mode = Mode::kSingleTurn;
  DifficultyTable difficulty;
  std::string rules;
  Grammar grammar = Grammar::kInteger;
  std::string grammar_hint;
  std::string caption_format;
  /// Reward magnitudes, merged into the generation params.
  Json rewards = Json::object();
  /// Render knobs (cell_px, canvas_px).
  Json render = Json::object();
  std::vector<std::string> agents{kSingleAgent};
  int max_steps = 1;
};

void to_json(Json& j, const EnvDescriptor& d);
void from_json(const Json& j, EnvDescriptor& d);

/// Environment registry. Concurrent readers are safe; registration takes an
/// exclusive lock.
class Registry {
 public:
  struct Entry {
    EnvDescriptor descriptor;
    GameFactory factory;
  };

  /// Throws GymError(kDuplicateEnv) when the id is taken and
  /// GymError(kConfig) when the difficulty table is malformed.
  void register_env(EnvDescriptor descriptor, GameFactory factory);

  bool contains(const std::string& env_id) const;
  /// Throws GymError(kUnknownEnv).
  Entry at(const std::string& env_id) const;
  std::vector<EnvDescriptor> catalog() const;
  std::size_t size() const;
  /// Machine-readable catalog in manifest form.
  Json manifest() const;

  /// Registry holding every shipped environment, built once from the
  /// embedded manifest.
  static const Registry& builtin();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, Entry> entries_;
};

/// The catalog manifest compiled into the library.
const Json& builtin_manifest();

/// Registers every shipped env described by `manifest` into `registry`.
void register_builtin_envs(Registry& registry, const Json& manifest);

}  // namespace gymv
