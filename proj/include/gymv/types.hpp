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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gymv/image.hpp"
#include "gymv/rng.hpp"

namespace gymv {

using Json = nlohmann::json;

enum class ErrorCode {
  kInvalidSpec,
  kUnknownEnv,
  kUnknownLevel,
  kDuplicateEnv,
  kStepAfterDone,
  kMissingAction,
  kOffTurnAction,
  kConfig,
  kGeneration,
};

/// Error raised by the protocol layer. The code maps onto HTTP statuses in the
/// service.
class GymError : public std::runtime_error {
 public:
  GymError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class Category { kAlgorithmic, kCognition, kGeometry, kGraphs, kLogic, kPuzzles, kGames };
enum class Mode { kSingleTurn, kMultiTurn };

std::string_view to_string(Category c);
std::string_view to_string(Mode m);
Category parse_category(std::string_view text);
Mode parse_mode(std::string_view text);

// Declaration order is the prompt assembly order.
enum class SegmentTag { kRules, kQuestion, kHistory, kCaption, kToolResult, kFeedback };

std::string_view to_string(SegmentTag t);
SegmentTag parse_segment_tag(std::string_view text);

struct Segment {
  SegmentTag tag;
  std::string text;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// One agent-step's input: an image plus tagged text. Only Feedback and
/// ToolResult may repeat.
struct Observation {
  RasterImage image;
  std::vector<Segment> segments;
  /// Past frames, only filled by a history window with images enabled.
  std::vector<RasterImage> history_images;

  bool has(SegmentTag tag) const;
  const Segment* find(SegmentTag tag) const;
  /// Inserts a segment in assembly order; throws std::logic_error on a duplicate unique tag.
  void add(SegmentTag tag, std::string text);
  void remove(SegmentTag tag);
  /// Sorts segments into assembly order (stable for repeated tags).
  void normalize();
  /// Text prompt in assembly order, one block per segment.
  std::string prompt() const;

  friend bool operator==(const Observation&, const Observation&) = default;
};

inline const std::string kSingleAgent = "agent_0";

/// Mapping from agent id to a per-agent value. `all_done` is meaningful on
/// termination/truncation maps.
template <typename T>
struct AgentMap {
  std::map<std::string, T> entries;
  bool all_done = false;

  bool contains(const std::string& id) const { return entries.count(id) != 0; }
  const T& at(const std::string& id) const { return entries.at(id); }
  T& operator[](const std::string& id) { return entries[id]; }
  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& [k, v] : entries) out.push_back(k);
    return out;
  }
  auto begin() const { return entries.begin(); }
  auto end() const { return entries.end(); }

  friend bool operator==(const AgentMap&, const AgentMap&) = default;
};

using Info = Json;

struct StepResult {
  AgentMap<Observation> observations;
  AgentMap<double> rewards;
  AgentMap<bool> terminated;
  AgentMap<bool> truncated;
  AgentMap<Info> info;

  bool all_done() const { return terminated.all_done || truncated.all_done; }

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

enum class WrapperKind { kRules, kCaption, kHistory, kActionParser, kTool };

std::string_view to_string(WrapperKind k);
WrapperKind parse_wrapper_kind(std::string_view text);

struct WrapperConfig {
  WrapperKind kind = WrapperKind::kRules;
  Json params = Json::object();

  friend bool operator==(const WrapperConfig&, const WrapperConfig&) = default;
};

struct EnvSpec {
  std::string env_id;
  std::optional<Category> category;
  std::optional<Mode> mode;
  int difficulty = 0;
  Json param_overrides = Json::object();
  std::vector<WrapperConfig> wrappers;

  friend bool operator==(const EnvSpec&, const EnvSpec&) = default;
};

/// Levels 0..2 mapped to generation parameters.
struct DifficultyTable {
  std::map<int, Json> levels;
  /// Complexity-driving parameters; must be non-decreasing in level.
  std::vector<std::string> monotone;
  /// Size parameters; must strictly increase in level.
  std::vector<std::string> size;

  /// Throws GymError(kConfig) when an invariant is violated.
  void validate(std::string_view env_id) const;
  /// Throws GymError(kUnknownLevel) for an undeclared level.
  const Json& at(int level) const;
};

void to_json(Json& j, const Segment& s);
void from_json(const Json& j, Segment& s);
void to_json(Json& j, const WrapperConfig& w);
void from_json(const Json& j, WrapperConfig& w);
void to_json(Json& j, const EnvSpec& s);
void from_json(const Json& j, EnvSpec& s);
void to_json(Json& j, const DifficultyTable& t);
void from_json(const Json& j, DifficultyTable& t);

/// Observation wire form; the image travels as base64 PNG.
Json observation_to_json(const Observation& obs);
Observation observation_from_json(const Json& j);
Json step_result_to_json(const StepResult& result);
StepResult step_result_from_json(const Json& j);
Json observations_to_json(const AgentMap<Observation>& obs);
AgentMap<Observation> observations_from_json(const Json& j);

/// Shortest decimal text that round-trips the double; shared by every
/// serializer so reward values stay bit-exact across transports.
std::string format_number(double value);

}  // namespace gymv
