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
#include <gtest/gtest.h>

#include <set>

#include "gymv/env.hpp"
#include "gymv/envs/multiturn.hpp"
#include "gymv/episode.hpp"
#include "gymv/harness.hpp"
#include "gymv/parse.hpp"
#include "gymv/registry.hpp"
#include "gymv/wrappers.hpp"
#include "oracles.hpp"

namespace gymv {
namespace {

EnvSpec spec_of(const std::string& id, int level = 0) {
  EnvSpec s;
  s.env_id = id;
  s.difficulty = level;
  return s;
}

std::vector<std::uint8_t> first_png(const std::string& id, int level, std::uint64_t seed) {
  auto env = make_instance(spec_of(id, level), Seed{seed});
  const auto obs = env->reset();
  return encode_png(obs.begin()->second.image);
}

// --- seeds and streams --------------------------------------------------------

TEST(Seed, StreamsAreIndependentAndStable) {
  EXPECT_NE(derive_stream(7, kDynamicsStream), derive_stream(7, kRenderStream));
  EXPECT_NE(derive_stream(7, kDynamicsStream), derive_stream(8, kDynamicsStream));
  Rng a(Seed{7}, kDynamicsStream), b(Seed{7}, kDynamicsStream);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Seed, RenderingNeverPerturbsDynamics) {
  auto plain = make_instance(spec_of("game2048"), Seed{5});
  auto rendered = make_instance(spec_of("game2048"), Seed{5});
  plain->reset();
  rendered->reset();
  for (int i = 0; i < 30 && !plain->done(); ++i) {
    for (int j = 0; j < 3; ++j) (void)rendered->render(kSingleAgent);
    AgentMap<std::string> a;
    a[kSingleAgent] = std::string(envs::kDirectionNames[static_cast<std::size_t>(i % 4)]);
    plain->step(a);
    rendered->step(a);
    EXPECT_EQ(plain->game().state_digest(), rendered->game().state_digest());
  }
}

// --- spec and registry ----------------------------------------------------------

TEST(EnvSpec, JsonRoundTripIsIdentity) {
  EnvSpec s = spec_of("sokoban", 2);
  s.category = Category::kGames;
  s.mode = Mode::kMultiTurn;
  s.param_overrides = Json{{"max_steps", 50}};
  s.wrappers = {{WrapperKind::kRules, Json{{"enabled", true}}}, {WrapperKind::kHistory, Json{{"k", 3}}}};
  const Json j = s;
  EXPECT_EQ(j.get<EnvSpec>(), s);
  EXPECT_EQ(Json(j.get<EnvSpec>()).dump(), j.dump());
}

TEST(EnvSpec, RejectsMalformed) {
  EXPECT_THROW(Json::array().get<EnvSpec>(), GymError);
  EXPECT_THROW((Json{{"difficulty", 0}}.get<EnvSpec>()), GymError);
  EXPECT_THROW((Json{{"env_id", "sokoban"}, {"mode", "Sideways"}}.get<EnvSpec>()), GymError);
}

TEST(Registry, CatalogMatchesManifest) {
  const Registry& reg = Registry::builtin();
  const Json& manifest = builtin_manifest();
  EXPECT_EQ(reg.size(), manifest.at("envs").size());
  std::map<std::string, int> per_mode;
  for (const auto& d : reg.catalog()) per_mode[std::string(to_string(d.mode))]++;
  EXPECT_EQ(per_mode["SingleTurn"], 12);
  EXPECT_EQ(per_mode["MultiTurn"], 5);
  const auto island = reg.at("largest_island").descriptor;
  EXPECT_EQ(island.category, Category::kGeometry);
  EXPECT_EQ(island.mode, Mode::kSingleTurn);
}

TEST(Registry, DuplicateAndUnknownIds) {
  Registry reg;
  register_builtin_envs(reg, builtin_manifest());
  auto entry = reg.at("largest_island");
  EXPECT_THROW(reg.register_env(entry.descriptor, entry.factory), GymError);
  try {
    (void)reg.at("nope");
    FAIL();
  } catch (const GymError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEnv);
  }
}

TEST(Registry, DifficultyTableInvariants) {
  for (const auto& d : Registry::builtin().catalog()) {
    EXPECT_NO_THROW(d.difficulty.validate(d.env_id));
    EXPECT_EQ(d.difficulty.levels.size(), 3u) << d.env_id;
  }
  DifficultyTable bad;
  bad.levels = {{0, Json{{"n", 5}}}, {1, Json{{"n", 4}}}};
  bad.size = {"n"};
  EXPECT_THROW(bad.validate("t"), GymError);
  DifficultyTable no_zero;
  no_zero.levels = {{1, Json::object()}};
  EXPECT_THROW(no_zero.validate("t"), GymError);
}

TEST(Registry, SizeParametersStrictlyIncrease) {
  const std::map<std::string, std::string> size_param = {
      {"rotten_oranges", "grid_side"}, {"grid_bfs", "grid_side"},   {"binary_matrix", "grid_side"},
      {"largest_island", "grid_side"}, {"visible_line", "line_count"}, {"convex_hull_count", "point_count"},
      {"shortest_path", "node_count"}, {"longest_path_len", "node_count"}, {"tower_of_hanoi", "discs"},
      {"sokoban", "grid_side"},        {"frozenlake", "grid_side"},  {"minesweeper", "grid_side"}};
  for (const auto& [id, p] : size_param) {
    const auto d = Registry::builtin().at(id).descriptor;
    EXPECT_LT(d.difficulty.at(0).at(p).get<double>(), d.difficulty.at(1).at(p).get<double>()) << id;
    EXPECT_LT(d.difficulty.at(1).at(p).get<double>(), d.difficulty.at(2).at(p).get<double>()) << id;
  }
}

// --- make/reset/step ---------------------------------------------------------------

TEST(Make, SameSeedSameBytes) {
  EXPECT_EQ(first_png("largest_island", 0, 7), first_png("largest_island", 0, 7));
  EXPECT_NE(first_png("largest_island", 0, 7), first_png("largest_island", 0, 8));
}

TEST(Make, UnknownLevelAndEnv) {
  try {
    make_instance(spec_of("sokoban", 3), Seed{0});
    FAIL();
  } catch (const GymError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLevel);
  }
  EXPECT_THROW(make_instance(spec_of("no_such_env"), Seed{0}), GymError);
  EnvSpec wrong = spec_of("sokoban");
  wrong.mode = Mode::kSingleTurn;
  EXPECT_THROW(make_instance(wrong, Seed{0}), GymError);
}

TEST(Make, FrozenLakeLayoutsDistinctAndSolvable) {
  std::set<std::string> layouts;
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto env = make_instance(spec_of("frozenlake"), Seed{s});
    env->reset();
    const std::string cap = env->game().caption(kSingleAgent);
    EXPECT_TRUE(test::oracle::lake_reachable(test::oracle::caption_rows(cap))) << "seed " << s;
    layouts.insert(cap);
  }
  // 4x4 maps admit only a few thousand layouts, so a couple of seed collisions are expected.
  EXPECT_GE(layouts.size(), 95u);
}

TEST(Step, BudgetTruncatesExactly) {
  auto env = make_instance(spec_of("sokoban"), Seed{1});
  env->reset();
  EXPECT_EQ(env->budget(), 200);
  StepResult last;
  int steps = 0;
  while (!env->done()) {
    AgentMap<std::string> a;
    a[kSingleAgent] = "nonsense";  // invalid -> no-op
    last = env->step(a);
    ++steps;
  }
  EXPECT_EQ(steps, 200);
  EXPECT_TRUE(last.truncated.all_done);
  EXPECT_FALSE(last.terminated.all_done);
  EXPECT_TRUE(last.truncated.at(kSingleAgent));
  AgentMap<std::string> a;
  a[kSingleAgent] = "up";
  try {
    env->step(a);
    FAIL();
  } catch (const GymError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStepAfterDone);
  }
}

TEST(Step, BudgetOverride) {
  EnvSpec s = spec_of("frozenlake");
  s.param_overrides = Json{{"max_steps", 3}};
  auto env = make_instance(s, Seed{2});
  env->reset();
  EXPECT_EQ(env->budget(), 3);
  s.param_overrides = Json{{"max_steps", 0}};
  EXPECT_THROW(make_instance(s, Seed{2}), GymError);
}

TEST(Step, SingleTurnEndsAfterOneStep) {
  for (const auto& d : Registry::builtin().catalog()) {
    if (d.mode != Mode::kSingleTurn) continue;
    auto env = make_instance(spec_of(d.env_id), Seed{3});
    env->reset();
    AgentMap<std::string> a;
    a[kSingleAgent] = "whatever";
    const StepResult r = env->step(a);
    EXPECT_TRUE(r.terminated.all_done) << d.env_id;
    EXPECT_TRUE(r.terminated.at(kSingleAgent));
    EXPECT_EQ(r.rewards.at(kSingleAgent), 0.0);
    EXPECT_EQ(r.info.at(kSingleAgent).at("step"), 1);
    EXPECT_TRUE(env->done());
  }
}

TEST(Step, MissingAndOffTurnActions) {
  auto env = make_instance(spec_of("tictactoe"), Seed{0});
  env->reset();
  try {
    env->step({});
    FAIL();
  } catch (const GymError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingAction);
  }
  AgentMap<std::string> both;
  both[envs::TicTacToe::kX] = "place 0 0";
  both[envs::TicTacToe::kO] = "place 1 1";
  try {
    env->step(both);
    FAIL();
  } catch (const GymError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOffTurnAction);
  }
}

// Key sets agree per step; non-terminal steps report the next mover only.
TEST(Step, TicTacToeTurnAlternationAndKeySets) {
  auto env = make_instance(spec_of("tictactoe"), Seed{0});
  const auto first = env->reset();
  EXPECT_EQ(first.keys(), std::vector<std::string>{envs::TicTacToe::kX});
  const std::vector<std::pair<std::string, std::string>> script = {
      {envs::TicTacToe::kX, "place 0 0"}, {envs::TicTacToe::kO, "place 1 1"},
      {envs::TicTacToe::kX, "place 0 1"}, {envs::TicTacToe::kO, "place 2 2"},
      {envs::TicTacToe::kX, "place 0 2"}};
  for (std::size_t i = 0; i < script.size(); ++i) {
    AgentMap<std::string> a;
    a[script[i].first] = script[i].second;
    const StepResult r = env->step(a);
    EXPECT_EQ(r.observations.keys(), r.rewards.keys());
    EXPECT_EQ(r.rewards.keys(), r.terminated.keys());
    EXPECT_EQ(r.terminated.keys(), r.truncated.keys());
    EXPECT_EQ(r.truncated.keys(), r.info.keys());
    if (i + 1 < script.size()) {
      EXPECT_EQ(r.observations.keys(), std::vector<std::string>{script[i + 1].first});
    } else {
      EXPECT_EQ(r.observations.size(), 2u);
      EXPECT_EQ(r.rewards.at(envs::TicTacToe::kX), 1.0);
      EXPECT_EQ(r.rewards.at(envs::TicTacToe::kO), -1.0);
    }
  }
}

TEST(Step, InfoEchoesParsedAction) {
  auto env = make_instance(spec_of("frozenlake"), Seed{4});
  env->reset();
  AgentMap<std::string> a;
  a[kSingleAgent] = "I think I should go LEFT";
  const StepResult r = env->step(a);
  const Json& info = r.info.at(kSingleAgent);
  EXPECT_EQ(info.at("parsed"), "left");
  EXPECT_EQ(info.at("step"), 1);
  EXPECT_EQ(info.at("action"), a.at(kSingleAgent));
}

// --- observations -------------------------------------------------------------------

TEST(Observation, SegmentRulesAndPromptOrder) {
  Observation o;
  o.add(SegmentTag::kFeedback, "f1");
  o.add(SegmentTag::kCaption, "c");
  o.add(SegmentTag::kRules, "r");
  o.add(SegmentTag::kFeedback, "f2");
  o.add(SegmentTag::kQuestion, "q");
  EXPECT_THROW(o.add(SegmentTag::kRules, "again"), std::logic_error);
  EXPECT_EQ(o.prompt(), "[Rules]\nr\n\n[Question]\nq\n\n[Caption]\nc\n\n[Feedback]\nf1\n\n[Feedback]\nf2");
}

TEST(Observation, JsonRoundTrip) {
  auto env = make_instance(spec_of("minesweeper"), Seed{1});
  const auto obs = env->reset();
  const Json j = observations_to_json(obs);
  EXPECT_EQ(observations_from_json(j), obs);
}

TEST(StepResult, JsonRoundTripIsExact) {
  auto env = make_instance(spec_of("game2048", 1), Seed{1});
  env->reset();
  AgentMap<std::string> a;
  a[kSingleAgent] = "left";
  const StepResult r = env->step(a);
  const Json j = step_result_to_json(r);
  const StepResult back = step_result_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back, r);
}

TEST(FormatNumber, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -16.7, 1e-12, 123456789.125}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(0.5), "0.5");
}

// --- action parsing -----------------------------------------------------------------

TEST(Parse, LastMatchWins) {
  const auto up = parse_action("I will go up", Grammar::kDirection);
  ASSERT_NE(as_action(up), nullptr);
  EXPECT_EQ(as_action(up)->canonical(), "up");
  const auto right = parse_action("left... no, right", Grammar::kDirection);
  EXPECT_EQ(as_action(right)->canonical(), "right");
  const auto bad = parse_action("qwzx", Grammar::kDirection);
  ASSERT_TRUE(std::holds_alternative<InvalidAction>(bad));
  EXPECT_EQ(std::get<InvalidAction>(bad).reason, "no match");
}

TEST(Parse, GrammarsCanonicalizeStably) {
  const std::vector<std::pair<Grammar, std::string>> cases = {
      {Grammar::kReveal, "let me reveal 2 3"},
      {Grammar::kPlace, "place 1 2"},
      {Grammar::kInteger, "The answer is -4"},
      {Grammar::kIntegerSequence, "path: 0 -> 3 -> 5"},
      {Grammar::kPairSequence, "(0,2) (0,1) (2,1)"},
      {Grammar::kDigitGrid, "1234\n3412\n2143\n4321"},
      {Grammar::kBit, "output is 1"}};
  for (const auto& [g, text] : cases) {
    const auto p = parse_action(text, g);
    ASSERT_NE(as_action(p), nullptr) << text;
    const std::string canon = as_action(p)->canonical();
    const auto again = parse_action(canon, g);
    ASSERT_NE(as_action(again), nullptr) << canon;
    EXPECT_EQ(as_action(again)->canonical(), canon);
    EXPECT_EQ(as_action(again)->values, as_action(p)->values);
  }
  EXPECT_EQ(as_action(parse_action("path: 0 -> 3 -> 5", Grammar::kIntegerSequence))->values,
            (std::vector<long long>{0, 3, 5}));
}

TEST(Parse, ParserIsTotal) {
  Rng rng(99);
  const std::string alphabet = "0123456789 ,()-\nupdownleftrightrevealplace?!";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const auto len = rng.uniform_int(0, 40);
    for (int j = 0; j < len; ++j) s += alphabet[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(alphabet.size()) - 1))];
    for (int g = 0; g <= static_cast<int>(Grammar::kBit); ++g) {
      EXPECT_NO_THROW((void)parse_action(s, static_cast<Grammar>(g)));
    }
  }
}

// --- episodes -------------------------------------------------------------------------

TEST(Episode, SingleTurnHasOneTransitionMultiTurnAtLeastOne) {
  OracleAgent oracle;
  EXPECT_EQ(run_episode(oracle, spec_of("grid_bfs"), Seed{1}).transitions.size(), 1u);
  const auto rec = run_episode(oracle, spec_of("sokoban"), Seed{1});
  EXPECT_GE(rec.transitions.size(), 1u);
  EXPECT_DOUBLE_EQ(rec.returns.at(kSingleAgent), rec.final_score);
}

TEST(Episode, BatchOfSingleTurnEqualsIndependentGames) {
  const auto batch = run_episodes(agent_factory("oracle"), spec_of("circuit_logic"), seed_range(0, 10));
  ASSERT_EQ(batch.size(), 10u);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    OracleAgent solo;
    EXPECT_EQ(batch[i], run_episode(solo, spec_of("circuit_logic"), Seed{i}));
  }
}

TEST(Episode, JsonlRoundTripInlineAndFiles) {
  const auto batch = run_episodes(agent_factory("random"), spec_of("frozenlake"), seed_range(0, 4), 2);
  EXPECT_EQ(batch_from_jsonl(batch_to_jsonl(batch)), batch);
  const auto dir = std::filesystem::temp_directory_path() / "gymv_episode_files";
  std::filesystem::remove_all(dir);
  write_batch(batch, dir / "batch.jsonl", ImageStorage::kFiles);
  EXPECT_TRUE(std::filesystem::exists(dir / "images"));
  EXPECT_EQ(read_batch(dir / "batch.jsonl"), batch);
  std::filesystem::remove_all(dir);
}

TEST(Episode, ThreadCountDoesNotChangeResults) {
  const auto one = run_episodes(agent_factory("random"), spec_of("minesweeper"), seed_range(0, 6), 2, 1);
  const auto three = run_episodes(agent_factory("random"), spec_of("minesweeper"), seed_range(0, 6), 2, 3);
  EXPECT_EQ(batch_to_jsonl(one), batch_to_jsonl(three));
}

TEST(Episode, ReplayReconstructsFinalState) {
  const auto rec = run_episodes(agent_factory("random"), spec_of("game2048"), {11}).front();
  auto env = make_instance(rec.spec, rec.seed);
  env->reset();
  for (const auto& t : rec.transitions) env->step(t.actions);
  auto again = make_instance(rec.spec, rec.seed);
  again->reset();
  for (const auto& t : rec.transitions) again->step(t.actions);
  EXPECT_EQ(env->game().state_digest(), again->game().state_digest());
  EXPECT_EQ(encode_png(env->render(kSingleAgent)),
            encode_png(rec.transitions.back().result.observations.at(kSingleAgent).image));
}

}  // namespace
}  // namespace gymv
