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
#include "gymv/types.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace gymv {

namespace {

constexpr std::array<std::string_view, 7> kCategoryNames = {
    "Algorithmic", "Cognition", "Geometry", "Graphs", "Logic", "Puzzles", "Games"};
constexpr std::array<std::string_view, 2> kModeNames = {"SingleTurn", "MultiTurn"};
constexpr std::array<std::string_view, 6> kTagNames = {"Rules",   "Question",   "History",
                                                       "Caption", "ToolResult", "Feedback"};
constexpr std::array<std::string_view, 5> kWrapperNames = {"Rules", "Caption", "History",
                                                           "ActionParser", "Tool"};

template <typename E, std::size_t N>
E parse_enum(const std::array<std::string_view, N>& names, std::string_view text,
             std::string_view what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<E>(i);
  }
  throw GymError(ErrorCode::kInvalidSpec,
                 "unknown " + std::string(what) + " '" + std::string(text) + "'");
}

bool repeatable(SegmentTag tag) {
  return tag == SegmentTag::kFeedback || tag == SegmentTag::kToolResult;
}

}  // namespace

std::string_view to_string(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(Mode m) { return kModeNames[static_cast<std::size_t>(m)]; }
std::string_view to_string(SegmentTag t) { return kTagNames[static_cast<std::size_t>(t)]; }
std::string_view to_string(WrapperKind k) { return kWrapperNames[static_cast<std::size_t>(k)]; }

Category parse_category(std::string_view text) {
  return parse_enum<Category>(kCategoryNames, text, "category");
}
Mode parse_mode(std::string_view text) { return parse_enum<Mode>(kModeNames, text, "mode"); }
SegmentTag parse_segment_tag(std::string_view text) {
  return parse_enum<SegmentTag>(kTagNames, text, "segment tag");
}
WrapperKind parse_wrapper_kind(std::string_view text) {
  return parse_enum<WrapperKind>(kWrapperNames, text, "wrapper kind");
}

bool Observation::has(SegmentTag tag) const { return find(tag) != nullptr; }

const Segment* Observation::find(SegmentTag tag) const {
  for (const auto& s : segments) {
    if (s.tag == tag) return &s;
  }
  return nullptr;
}

void Observation::add(SegmentTag tag, std::string text) {
  if (!repeatable(tag) && has(tag)) {
    throw std::logic_error("duplicate " + std::string(to_string(tag)) + " segment");
  }
  // Kept in assembly order; repeats of a tag stay in arrival order.
  const auto at = std::upper_bound(segments.begin(), segments.end(), tag,
                                   [](SegmentTag t, const Segment& s) { return t < s.tag; });
  segments.insert(at, {tag, std::move(text)});
}

void Observation::remove(SegmentTag tag) {
  std::erase_if(segments, [tag](const Segment& s) { return s.tag == tag; });
}

void Observation::normalize() {
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment& a, const Segment& b) { return a.tag < b.tag; });
}

std::string Observation::prompt() const {
  Observation sorted = *this;
  sorted.normalize();
  std::string out;
  for (const auto& s : sorted.segments) {
    if (!out.empty()) out += "\n\n";
    out += "[";
    out += to_string(s.tag);
    out += "]\n";
    out += s.text;
  }
  return out;
}

void DifficultyTable::validate(std::string_view env_id) const {
  const std::string id(env_id);
  if (!levels.count(0)) throw GymError(ErrorCode::kConfig, id + ": difficulty level 0 missing");
  for (const auto& [level, params] : levels) {
    if (level < 0 || level > 2) {
      throw GymError(ErrorCode::kConfig, id + ": difficulty levels must lie in 0..2");
    }
    if (!params.is_object()) throw GymError(ErrorCode::kConfig, id + ": level params not an object");
  }
  auto check = [&](const std::string& name, bool strict) {
    std::optional<double> previous;
    for (const auto& [level, params] : levels) {
      if (!params.contains(name) || !params[name].is_number()) {
        throw GymError(ErrorCode::kConfig, id + ": parameter '" + name + "' missing at level " +
                                               std::to_string(level));
      }
      const double v = params[name].get<double>();
      if (previous && (strict ? v <= *previous : v < *previous)) {
        throw GymError(ErrorCode::kConfig,
                       id + ": parameter '" + name + "' not monotone across levels");
      }
      previous = v;
    }
  };
  for (const auto& name : monotone) check(name, false);
  for (const auto& name : size) check(name, true);
}

const Json& DifficultyTable::at(int level) const {
  auto it = levels.find(level);
  if (it == levels.end()) {
    throw GymError(ErrorCode::kUnknownLevel, "unknown difficulty level " + std::to_string(level));
  }
  return it->second;
}

void to_json(Json& j, const Segment& s) { j = Json{{"tag", to_string(s.tag)}, {"text", s.text}}; }

void from_json(const Json& j, Segment& s) {
  s.tag = parse_segment_tag(j.at("tag").get<std::string>());
  s.text = j.at("text").get<std::string>();
}

void to_json(Json& j, const WrapperConfig& w) {
  j = Json{{"kind", to_string(w.kind)}, {"params", w.params}};
}

void from_json(const Json& j, WrapperConfig& w) {
  w.kind = parse_wrapper_kind(j.at("kind").get<std::string>());
  w.params = j.value("params", Json::object());
  if (!w.params.is_object()) throw GymError(ErrorCode::kInvalidSpec, "wrapper params must be an object");
}

void to_json(Json& j, const EnvSpec& s) {
  j = Json{{"env_id", s.env_id},
           {"difficulty", s.difficulty},
           {"param_overrides", s.param_overrides},
           {"wrappers", s.wrappers}};
  if (s.category) j["category"] = to_string(*s.category);
  if (s.mode) j["mode"] = to_string(*s.mode);
}

void from_json(const Json& j, EnvSpec& s) {
  if (!j.is_object()) throw GymError(ErrorCode::kInvalidSpec, "env spec must be a JSON object");
  try {
    s.env_id = j.at("env_id").get<std::string>();
    s.difficulty = j.value("difficulty", 0);
    s.param_overrides = j.value("param_overrides", Json::object());
    s.wrappers = j.value("wrappers", std::vector<WrapperConfig>{});
    s.category.reset();
    s.mode.reset();
    if (j.contains("category")) s.category = parse_category(j["category"].get<std::string>());
    if (j.contains("mode")) s.mode = parse_mode(j["mode"].get<std::string>());
  } catch (const Json::exception& e) {
    throw GymError(ErrorCode::kInvalidSpec, std::string("env spec: ") + e.what());
  }
  if (!s.param_overrides.is_object()) {
    throw GymError(ErrorCode::kInvalidSpec, "param_overrides must be an object");
  }
}

void to_json(Json& j, const DifficultyTable& t) {
  Json levels = Json::object();
  for (const auto& [level, params] : t.levels) levels[std::to_string(level)] = params;
  j = Json{{"levels", levels}, {"monotone", t.monotone}, {"size", t.size}};
}

void from_json(const Json& j, DifficultyTable& t) {
  t.levels.clear();
  for (const auto& [key, params] : j.at("levels").items()) t.levels[std::stoi(key)] = params;
  t.monotone = j.value("monotone", std::vector<std::string>{});
  t.size = j.value("size", std::vector<std::string>{});
}

Json observation_to_json(const Observation& obs) {
  Json j{{"image", png_base64(obs.image)}, {"segments", obs.segments}};
  if (!obs.history_images.empty()) {
    Json images = Json::array();
    for (const auto& im : obs.history_images) images.push_back(png_base64(im));
    j["history_images"] = images;
  }
  return j;
}

Observation observation_from_json(const Json& j) {
  Observation obs;
  obs.image = decode_png(base64_decode(j.at("image").get<std::string>()));
  obs.segments = j.at("segments").get<std::vector<Segment>>();
  if (j.contains("history_images")) {
    for (const auto& im : j["history_images"]) {
      obs.history_images.push_back(decode_png(base64_decode(im.get<std::string>())));
    }
  }
  return obs;
}

Json observations_to_json(const AgentMap<Observation>& obs) {
  Json j = Json::object();
  for (const auto& [agent, o] : obs) j[agent] = observation_to_json(o);
  return j;
}

AgentMap<Observation> observations_from_json(const Json& j) {
  AgentMap<Observation> out;
  for (const auto& [agent, o] : j.items()) out[agent] = observation_from_json(o);
  return out;
}

Json step_result_to_json(const StepResult& result) {
  Json rewards = Json::object();
  Json terminated = Json::object();
  Json truncated = Json::object();
  Json info = Json::object();
  for (const auto& [agent, r] : result.rewards) rewards[agent] = r;
  for (const auto& [agent, t] : result.terminated) terminated[agent] = t;
  for (const auto& [agent, t] : result.truncated) truncated[agent] = t;
  for (const auto& [agent, i] : result.info) info[agent] = i;
  return Json{{"observations", observations_to_json(result.observations)},
              {"rewards", rewards},
              {"terminated", terminated},
              {"truncated", truncated},
              {"info", info},
              {"terminated_all", result.terminated.all_done},
              {"truncated_all", result.truncated.all_done}};
}

StepResult step_result_from_json(const Json& j) {
  StepResult r;
  r.observations = observations_from_json(j.at("observations"));
  for (const auto& [agent, v] : j.at("rewards").items()) r.rewards[agent] = v.get<double>();
  for (const auto& [agent, v] : j.at("terminated").items()) r.terminated[agent] = v.get<bool>();
  for (const auto& [agent, v] : j.at("truncated").items()) r.truncated[agent] = v.get<bool>();
  for (const auto& [agent, v] : j.at("info").items()) r.info[agent] = v;
  r.terminated.all_done = j.value("terminated_all", false);
  r.truncated.all_done = j.value("truncated_all", false);
  return r;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

}  // namespace gymv
