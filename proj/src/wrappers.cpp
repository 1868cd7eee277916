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
#include "gymv/wrappers.hpp"

#include <algorithm>
#include <set>

namespace gymv {

AgentMap<Observation> Wrapper::reset() {
  AgentMap<Observation> obs = inner_->reset();
  for (auto& [agent, o] : obs.entries) decorate(agent, o);
  return obs;
}

StepResult Wrapper::step(const AgentMap<std::string>& actions) {
  StepResult r = inner_->step(actions);
  for (auto& [agent, o] : r.observations.entries) decorate(agent, o);
  return r;
}

// --- Rules --------------------------------------------------------------------

RulesWrapper::RulesWrapper(std::unique_ptr<Env> inner, bool enabled)
    : Wrapper(std::move(inner)), enabled_(enabled) {}

void RulesWrapper::decorate(const std::string&, Observation& obs) {
  if (!enabled_) return;
  obs.remove(SegmentTag::kRules);
  obs.add(SegmentTag::kRules, base().descriptor().rules);
}

// --- Caption ------------------------------------------------------------------

void CaptionWrapper::decorate(const std::string& agent, Observation& obs) {
  obs.remove(SegmentTag::kCaption);
  obs.add(SegmentTag::kCaption, base().game().caption(agent));
}

// --- History ------------------------------------------------------------------

HistoryWrapper::HistoryWrapper(std::unique_ptr<Env> inner, int k, bool include_images)
    : Wrapper(std::move(inner)), k_(k), include_images_(include_images) {}

int HistoryWrapper::visible_pairs(const std::string& agent) const {
  auto it = pairs_.find(agent);
  return it == pairs_.end() ? 0 : static_cast<int>(it->second.size());
}

std::string HistoryWrapper::summarize(const std::string& agent, const Observation& obs) const {
  std::string out = base().game().caption(agent);
  if (const Segment* f = obs.find(SegmentTag::kFeedback)) out = f->text + "\n" + out;
  return out;
}

AgentMap<Observation> HistoryWrapper::reset() {
  pairs_.clear();
  current_.clear();
  return Wrapper::reset();
}

StepResult HistoryWrapper::step(const AgentMap<std::string>& actions) {
  const int before = base().step_count();
  StepResult r = inner_->step(actions);
  if (base().step_count() != before) {
    const std::size_t keep = k_ > 0 ? static_cast<std::size_t>(k_ - 1) : 0;
    for (const auto& [agent, action] : actions) {
      auto& window = pairs_[agent];
      const Pending& seen = current_[agent];
      window.push_back({seen.summary, action, seen.image});
      while (window.size() > keep) window.pop_front();
    }
  }
  for (auto& [agent, o] : r.observations.entries) {
    decorate(agent, o);
    r.info[agent]["history_pairs"] = visible_pairs(agent);
  }
  return r;
}

void HistoryWrapper::decorate(const std::string& agent, Observation& obs) {
  // Summary first, so the window never nests inside itself.
  Pending now{summarize(agent, obs), include_images_ ? obs.image : RasterImage{}};
  obs.remove(SegmentTag::kHistory);
  obs.history_images.clear();
  const auto it = pairs_.find(agent);
  if (it != pairs_.end() && !it->second.empty()) {
    std::string text;
    const int n = static_cast<int>(it->second.size());
    int index = 0;
    for (const Pair& p : it->second) {
      const std::string label = "t-" + std::to_string(n - index);
      if (!text.empty()) text += "\n";
      text += "Observation " + label + ":\n" + p.summary + "\nAction " + label + ": " + p.action;
      if (include_images_) obs.history_images.push_back(p.image);
      ++index;
    }
    obs.add(SegmentTag::kHistory, std::move(text));
  }
  current_[agent] = std::move(now);
}

// --- ActionParser -------------------------------------------------------------

StepResult ActionParserWrapper::step(const AgentMap<std::string>& actions) {
  const Grammar grammar = base().descriptor().grammar;
  AgentMap<std::string> mapped;
  for (const auto& [agent, text] : actions) {
    if (parse_tool_call(text)) {
      mapped[agent] = text;
      continue;
    }
    const ActionParse parsed = parse_action(text, grammar);
    if (const auto* a = as_action(parsed)) {
      mapped[agent] = a->canonical();
    } else {
      mapped[agent] = text;
    }
  }
  StepResult r = inner_->step(mapped);
  for (const auto& [agent, text] : actions) {
    if (r.info.contains(agent)) r.info[agent]["raw_action"] = text;
  }
  return r;
}

// --- Tool ---------------------------------------------------------------------

ToolWrapper::ToolWrapper(std::unique_ptr<Env> inner, std::unique_ptr<Tool> tool, int budget)
    : Wrapper(std::move(inner)), tool_(std::move(tool)), budget_(budget) {}

AgentMap<Observation> ToolWrapper::reset() {
  calls_ = 0;
  last_.clear();
  AgentMap<Observation> obs = inner_->reset();
  for (const auto& [agent, o] : obs) last_[agent] = o;
  return obs;
}

StepResult ToolWrapper::step(const AgentMap<std::string>& actions) {
  std::map<std::string, std::string> calls;
  for (const auto& [agent, text] : actions) {
    if (auto expr = parse_tool_call(text)) calls[agent] = *expr;
  }
  if (calls.empty()) {
    StepResult r = inner_->step(actions);
    calls_ = 0;
    for (const auto& [agent, o] : r.observations) last_[agent] = o;
    return r;
  }
  if (base().done()) throw GymError(ErrorCode::kStepAfterDone, "episode already done");
  for (const auto& [agent, text] : actions) {
    if (!calls.count(agent)) {
      throw GymError(ErrorCode::kInvalidSpec, "cannot mix tool calls and actions in one step");
    }
  }

  StepResult r;
  for (const auto& [agent, expr] : calls) {
    ++calls_;
    Json info{{"tool", tool_->name()}, {"expression", expr}, {"tool_calls", calls_},
              {"step", base().step_count()}};
    std::string text;
    if (calls_ > budget_) {
      text = "error: tool budget of " + std::to_string(budget_) + " calls per step exhausted";
      info["error"] = "budget";
    } else {
      try {
        text = tool_->call(expr);
        info["result"] = text;
      } catch (const ToolError& e) {
        text = std::string("error: ") + e.what();
        info["error"] = e.what();
      }
    }
    Observation o = last_.count(agent) ? last_[agent] : base().observe(agent);
    o.remove(SegmentTag::kToolResult);
    o.remove(SegmentTag::kFeedback);
    o.add(SegmentTag::kToolResult, text);
    r.observations[agent] = std::move(o);
    r.rewards[agent] = 0.0;
    r.terminated[agent] = false;
    r.truncated[agent] = false;
    r.info[agent] = std::move(info);
  }
  return r;
}

// --- construction -------------------------------------------------------------

namespace {

void check_keys(const WrapperConfig& c, std::set<std::string> allowed) {
  for (const auto& [k, v] : c.params.items()) {
    if (!allowed.count(k)) {
      throw GymError(ErrorCode::kInvalidSpec,
                     "unknown " + std::string(to_string(c.kind)) + " wrapper param '" + k + "'");
    }
  }
}

bool bool_param(const WrapperConfig& c, const std::string& key, bool fallback) {
  if (!c.params.contains(key)) return fallback;
  if (!c.params[key].is_boolean()) throw GymError(ErrorCode::kInvalidSpec, key + " must be a boolean");
  return c.params[key].get<bool>();
}

int int_param(const WrapperConfig& c, const std::string& key, int fallback, int min) {
  if (!c.params.contains(key)) return fallback;
  const auto& v = c.params[key];
  if (!v.is_number_integer() || v.get<long long>() < min || v.get<long long>() > 1000000) {
    throw GymError(ErrorCode::kInvalidSpec, key + " must be an integer >= " + std::to_string(min));
  }
  return v.get<int>();
}

}  // namespace

std::unique_ptr<Env> apply_wrapper(std::unique_ptr<Env> env, const WrapperConfig& c) {
  switch (c.kind) {
    case WrapperKind::kRules:
      check_keys(c, {"enabled"});
      return std::make_unique<RulesWrapper>(std::move(env), bool_param(c, "enabled", true));
    case WrapperKind::kCaption:
      check_keys(c, {});
      return std::make_unique<CaptionWrapper>(std::move(env));
    case WrapperKind::kHistory:
      check_keys(c, {"k", "include_images"});
      return std::make_unique<HistoryWrapper>(std::move(env), int_param(c, "k", 3, 0),
                                              bool_param(c, "include_images", false));
    case WrapperKind::kActionParser:
      check_keys(c, {});
      return std::make_unique<ActionParserWrapper>(std::move(env));
    case WrapperKind::kTool: {
      check_keys(c, {"tool", "budget"});
      std::string name = "arithmetic";
      if (c.params.contains("tool")) {
        if (!c.params["tool"].is_string()) throw GymError(ErrorCode::kInvalidSpec, "tool must be a string");
        name = c.params["tool"].get<std::string>();
      }
      std::unique_ptr<Tool> tool;
      try {
        tool = make_tool(name);
      } catch (const ToolError& e) {
        throw GymError(ErrorCode::kInvalidSpec, e.what());
      }
      return std::make_unique<ToolWrapper>(std::move(env), std::move(tool),
                                           int_param(c, "budget", ToolWrapper::kDefaultBudget, 0));
    }
  }
  throw GymError(ErrorCode::kInvalidSpec, "unknown wrapper kind");
}

std::unique_ptr<Env> make(const EnvSpec& spec, Seed seed, const Registry& registry) {
  std::unique_ptr<Env> env = make_instance(spec, seed, registry);
  for (const auto& w : spec.wrappers) env = apply_wrapper(std::move(env), w);
  return env;
}

}  // namespace gymv
