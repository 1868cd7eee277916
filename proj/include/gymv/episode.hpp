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

// Episode records and their JSON-lines persistence.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gymv/types.hpp"

namespace gymv {

struct Transition {
  /// What each acting agent saw before acting.
  AgentMap<Observation> observations;
  AgentMap<std::string> actions;
  StepResult result;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct EpisodeRecord {
  EnvSpec spec;
  Seed seed;
  std::string agent;
  int rollout = 0;
  std::vector<Transition> transitions;
  /// Undiscounted return per agent.
  std::map<std::string, double> returns;
  /// Mean of the per-agent returns; the single agent's return when alone.
  double final_score = 0.0;
  /// Set when the agent failed (e.g. transport error); the episode stops there.
  std::optional<std::string> error;

  friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

using EpisodeBatch = std::vector<EpisodeRecord>;

enum class ImageStorage { kInline, kFiles };

/// One record as JSON. With kFiles, PNGs are written under `dir/images/` and
/// referenced by relative "image_path" keys.
Json episode_to_json(const EpisodeRecord& record, ImageStorage storage = ImageStorage::kInline,
                     const std::filesystem::path& dir = {}, std::size_t index = 0);
/// Inverse of episode_to_json; relative image paths resolve against `dir`.
EpisodeRecord episode_from_json(const Json& j, const std::filesystem::path& dir = {});

/// JSON-lines text, one record per line.
std::string batch_to_jsonl(const EpisodeBatch& batch, ImageStorage storage = ImageStorage::kInline,
                           const std::filesystem::path& dir = {});
EpisodeBatch batch_from_jsonl(const std::string& text, const std::filesystem::path& dir = {});

void write_batch(const EpisodeBatch& batch, const std::filesystem::path& file,
                 ImageStorage storage = ImageStorage::kInline);
EpisodeBatch read_batch(const std::filesystem::path& file);

}  // namespace gymv
