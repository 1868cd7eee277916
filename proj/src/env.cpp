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
#include "gymv/env.hpp"

#include <algorithm>

namespace gymv {

namespace {

StyleConfig style_from(const Json& render) {
  StyleConfig style;
  style.cell_px = render.value("cell_px", style.cell_px);
  style.canvas_px = render.value("canvas_px", style.canvas_px);
  style.max_px = render.value("max_px", style.max_px);
  style.font_scale = render.value("font_scale", style.font_scale);
  return style;
}

}  // namespace

EnvInstance::EnvInstance(EnvSpec spec, Seed seed, Registry::Entry entry)
    : spec_(std::move(spec)), seed_(seed), entry_(std::move(entry)) {
  const EnvDescriptor& d = entry_.descriptor;
  if (spec_.category && *spec_.category != d.category) {
    throw GymError(ErrorCode::kInvalidSpec, "category does not match catalog for '" + d.env_id + "'");
  }
  if (spec_.mode && *spec_.mode != d.mode) {
    throw GymError(ErrorCode::kInvalidSpec, "mode does not match catalog for '" + d.env_id + "'");
  }
  params_ = d.difficulty.at(spec_.difficulty);
  for (const auto& [k, v] : d.rewards.items()) params_[k] = v;
  Json render = d.render;
  for (const auto& [k, v] : spec_.param_overrides.items()) {
    if (k == "max_steps") continue;
    if (k.rfind("render.", 0) == 0) {
      render[k.substr(7)] = v;
    } else {
      params_[k] = v;
    }
  }
  style_ = style_from(render);
  budget_ = d.mode == Mode::kSingleTurn ? 1 : d.max_steps;
  if (spec_.param_overrides.contains("max_steps")) {
    const auto& v = spec_.param_overrides["max_steps"];
    if (!v.is_number_integer() || v.get<int>() < 1) {
      throw GymError(ErrorCode::kInvalidSpec, "max_steps must be a positive integer");
    }
    budget_ = v.get<int>();
  }
}

const Game& EnvInstance::game() const {
  if (!game_) throw std::logic_error("env not reset");
  return *game_;
}

std::vector<std::string> EnvInstance::to_move() const {
  if (!game_ || done_) return {};
  return game_->to_move();
}

RasterImage EnvInstance::render(const std::string& agent) const {
  Rng render_rng(derive_stream(seed_.value, kRenderStream) ^ static_cast<std::uint64_t>(steps_));
  return game().render(agent, style_, render_rng);
}

Observation EnvInstance::observe(const std::string& agent, const std::string& feedback) const {
  Observation obs;
  obs.image = render(agent);
  obs.add(SegmentTag::kQuestion, game().question(agent));
  if (!feedback.empty()) obs.add(SegmentTag::kFeedback, feedback);
  return obs;
}

AgentMap<Observation> EnvInstance::reset() {
  dynamics_ = Rng(seed_, kDynamicsStream);
  game_ = entry_.factory(params_, dynamics_);
  steps_ = 0;
  done_ = game_->over();
  AgentMap<Observation> out;
  for (const auto& agent : game_->to_move()) out[agent] = observe(agent);
  return out;
}

StepResult EnvInstance::step(const AgentMap<std::string>& actions) {
  if (!game_) throw GymError(ErrorCode::kStepAfterDone, "step before reset");
  if (done_) throw GymError(ErrorCode::kStepAfterDone, "episode already done");
  const auto movers = game_->to_move();
  for (const auto& agent : movers) {
    if (!actions.contains(agent)) {
      throw GymError(ErrorCode::kMissingAction, "missing action for " + agent);
    }
  }
  for (const auto& [agent, text] : actions) {
    if (std::find(movers.begin(), movers.end(), agent) == movers.end()) {
      throw GymError(ErrorCode::kOffTurnAction, "agent " + agent + " may not act now");
    }
  }

  GameStep outcome = game_->step(actions, dynamics_);
  ++steps_;
  const bool terminated = game_->over();
  const bool truncated = !terminated && steps_ >= budget_;
  done_ = terminated || truncated;

  StepResult result;
  for (auto& [agent, out] : outcome.outcomes) {
    result.observations[agent] = observe(agent, out.feedback);
    result.rewards[agent] = out.reward;
    result.terminated[agent] = terminated;
    result.truncated[agent] = truncated;
    Json info = std::move(out.info);
    info["step"] = steps_;
    if (actions.contains(agent)) {
      info["action"] = actions.at(agent);
      const ActionParse parsed = parse_action(actions.at(agent), entry_.descriptor.grammar);
      if (const auto* a = as_action(parsed)) {
        info["parsed"] = a->canonical();
      } else {
        info["parsed"] = nullptr;
        info["invalid_action"] = std::get<InvalidAction>(parsed).reason;
      }
    }
    result.info[agent] = std::move(info);
  }
  result.terminated.all_done = terminated;
  result.truncated.all_done = truncated;
  return result;
}

std::unique_ptr<EnvInstance> make_instance(const EnvSpec& spec, Seed seed, const Registry& registry) {
  return std::make_unique<EnvInstance>(spec, seed, registry.at(spec.env_id));
}

}  // namespace gymv
