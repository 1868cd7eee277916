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
#include "gymv/service.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <future>
#include <mutex>
#include <random>
#include <regex>
#include <shared_mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "httplib.h"

#include "gymv/env.hpp"
#include "gymv/wrappers.hpp"

namespace gymv {

using Clock = std::chrono::steady_clock;

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownEnv:
      return 404;
    case ErrorCode::kStepAfterDone:
      return 409;
    case ErrorCode::kGeneration:
      return 500;
    default:
      return 400;
  }
}

std::string wire_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpec: return "invalid_spec";
    case ErrorCode::kUnknownEnv: return "unknown_env";
    case ErrorCode::kUnknownLevel: return "unknown_level";
    case ErrorCode::kDuplicateEnv: return "duplicate_env";
    case ErrorCode::kStepAfterDone: return "step_after_done";
    case ErrorCode::kMissingAction: return "missing_action";
    case ErrorCode::kOffTurnAction: return "off_turn_action";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kGeneration: return "generation_failed";
  }
  return "error";
}

// --- wire types ----------------------------------------------------------------

RewardRequest RewardRequest::from_json(const Json& j) {
  if (!j.is_object()) throw ServiceError(400, "invalid_request", "request body must be a JSON object");
  RewardRequest r;
  try {
    r.model = j.at("model").get<std::string>();
    r.prompt = j.value("prompt", std::string{});
    if (j.contains("multimodal_outputs")) {
      const Json& mm = j["multimodal_outputs"];
      if (!mm.is_object()) throw ServiceError(400, "invalid_request", "multimodal_outputs must be an object");
      r.image_base64 = mm.value("image", std::string{});
    }
    r.metadata = j.value("metadata", Json::object());
  } catch (const Json::exception& e) {
    throw ServiceError(400, "invalid_request", std::string("reward request: ") + e.what());
  }
  if (!r.metadata.is_object()) throw ServiceError(400, "invalid_request", "metadata must be an object");
  return r;
}

Json RewardRequest::to_json() const {
  return Json{{"model", model},
              {"prompt", prompt},
              {"multimodal_outputs", {{"image", image_base64}}},
              {"metadata", metadata}};
}

Json RewardResponse::to_json() const {
  return Json{{"score", score}, {"detail", detail}, {"scorer_version", scorer_version}, {"batch_id", batch_id}};
}

RewardResponse RewardResponse::from_json(const Json& j) {
  RewardResponse r;
  r.score = j.at("score").get<double>();
  r.detail = j.at("detail").get<std::string>();
  r.scorer_version = j.at("scorer_version").get<std::string>();
  r.batch_id = j.at("batch_id").get<std::string>();
  return r;
}

// --- scorers ---------------------------------------------------------------------

namespace {

std::string manifest_scorer_version() {
  return builtin_manifest().value("scorer_version", std::string("1.0.0"));
}

RasterImage decode_request_image(const RewardRequest& r) {
  if (r.image_base64.empty()) throw ServiceError(422, "undecodable_image", "multimodal_outputs.image is empty");
  try {
    return decode_png(base64_decode(r.image_base64));
  } catch (const ImageError& e) {
    throw ServiceError(422, "undecodable_image", e.what());
  }
}

ServiceError bad_metadata(const std::string& what) { return ServiceError(400, "invalid_metadata", what); }

// Rebuilds the reference env named by metadata {spec | env_id+difficulty, seed, actions}.
std::unique_ptr<EnvInstance> reference_env(const Json& meta, const Registry& registry) {
  EnvSpec spec;
  try {
    if (meta.contains("spec")) {
      spec = meta["spec"].get<EnvSpec>();
    } else {
      spec.env_id = meta.at("env_id").get<std::string>();
      spec.difficulty = meta.value("difficulty", 0);
    }
    const auto seed = meta.value("seed", std::uint64_t{0});
    auto env = make_instance(spec, Seed{seed}, registry);
    env->reset();
    for (const auto& step : meta.value("actions", Json::array())) {
      AgentMap<std::string> actions;
      for (const auto& [agent, text] : step.items()) actions[agent] = text.get<std::string>();
      env->step(actions);
    }
    return env;
  } catch (const GymError& e) {
    throw ServiceError(http_status(e.code()) == 404 ? 400 : http_status(e.code()), wire_code(e.code()), e.what());
  } catch (const Json::exception& e) {
    throw bad_metadata(std::string("metadata: ") + e.what());
  }
}

class RenderMatchScorer final : public Scorer {
 public:
  explicit RenderMatchScorer(const Registry& registry) : registry_(registry) {}
  std::string name() const override { return "render_match"; }
  std::string version() const override { return manifest_scorer_version(); }

  ScoreResult score(const RewardRequest& r) const override {
    const RasterImage image = decode_request_image(r);
    auto env = reference_env(r.metadata, registry_);
    const std::string agent = r.metadata.value("agent", kSingleAgent);
    const RasterImage want = env->render(agent);
    if (image.width() != want.width() || image.height() != want.height()) {
      return {0.0, "size mismatch: got " + std::to_string(image.width()) + "x" + std::to_string(image.height()) +
                       ", want " + std::to_string(want.width()) + "x" + std::to_string(want.height())};
    }
    long same = 0;
    for (int y = 0; y < want.height(); ++y) {
      for (int x = 0; x < want.width(); ++x) same += image.at(x, y) == want.at(x, y);
    }
    const long total = static_cast<long>(want.width()) * want.height();
    return {static_cast<double>(same) / static_cast<double>(total),
            "pixels matched " + std::to_string(same) + "/" + std::to_string(total)};
  }

 private:
  const Registry& registry_;
};

// Most frequent color in the cell interior; glyph ink is a minority.
Rgb dominant_color(const RasterImage& image, const CellRect& rect) {
  std::map<std::uint32_t, int> counts;
  const int inset = std::max(1, rect.size / 8);
  for (int y = rect.y + inset; y < rect.y + rect.size - inset; ++y) {
    for (int x = rect.x + inset; x < rect.x + rect.size - inset; ++x) {
      const Rgb c = image.at(x, y);
      ++counts[(std::uint32_t{c.r} << 16) | (std::uint32_t{c.g} << 8) | c.b];
    }
  }
  std::uint32_t best = 0;
  int best_n = -1;
  for (const auto& [key, n] : counts) {
    if (n > best_n) {
      best = key;
      best_n = n;
    }
  }
  return {static_cast<std::uint8_t>(best >> 16), static_cast<std::uint8_t>(best >> 8), static_cast<std::uint8_t>(best)};
}

// metadata: {"cells": [[role, ...], ...], "cell_px": int, "coordinates": bool}
class GridMatchScorer final : public Scorer {
 public:
  std::string name() const override { return "grid_match"; }
  std::string version() const override { return manifest_scorer_version(); }

  ScoreResult score(const RewardRequest& r) const override {
    const RasterImage image = decode_request_image(r);
    std::vector<std::vector<std::string>> roles;
    StyleConfig style;
    GridOptions options;
    try {
      roles = r.metadata.at("cells").get<std::vector<std::vector<std::string>>>();
      style.cell_px = r.metadata.value("cell_px", style.cell_px);
      options.coordinates = r.metadata.value("coordinates", false);
    } catch (const Json::exception& e) {
      throw bad_metadata(std::string("grid_match metadata: ") + e.what());
    }
    if (roles.empty() || roles.front().empty()) throw bad_metadata("grid_match: empty cell matrix");
    if (style.cell_px < 4) throw bad_metadata("grid_match: cell_px must be >= 4");
    long same = 0;
    long total = 0;
    for (std::size_t row = 0; row < roles.size(); ++row) {
      for (std::size_t col = 0; col < roles[row].size(); ++col) {
        ++total;
        const auto rect = grid_cell_rect(static_cast<int>(row), static_cast<int>(col), style, options);
        if (rect.x + rect.size > image.width() || rect.y + rect.size > image.height()) continue;
        const auto it = style.palette.find(roles[row][col]);
        if (it == style.palette.end()) throw bad_metadata("grid_match: unknown role '" + roles[row][col] + "'");
        same += channel_distance(dominant_color(image, rect), it->second) <= 16;
      }
    }
    return {static_cast<double>(same) / static_cast<double>(total),
            "cells matched " + std::to_string(same) + "/" + std::to_string(total)};
  }
};

// prompt is the answer; metadata names a single-turn instance.
class AnswerVerifyScorer final : public Scorer {
 public:
  explicit AnswerVerifyScorer(const Registry& registry) : registry_(registry) {}
  std::string name() const override { return "answer_verify"; }
  std::string version() const override { return manifest_scorer_version(); }

  ScoreResult score(const RewardRequest& r) const override {
    if (!r.image_base64.empty()) decode_request_image(r);
    auto env = reference_env(r.metadata, registry_);
    if (env->descriptor().mode != Mode::kSingleTurn) {
      throw bad_metadata("answer_verify: '" + env->descriptor().env_id + "' is not single-turn");
    }
    if (env->done()) throw bad_metadata("answer_verify: actions already answered the instance");
    AgentMap<std::string> answer;
    answer[kSingleAgent] = r.prompt;
    const StepResult result = env->step(answer);
    const Json& info = result.info.at(kSingleAgent);
    const std::string detail = info.contains("verdict") ? info["verdict"].value("detail", std::string{}) : "";
    return {result.rewards.at(kSingleAgent), detail};
  }

 private:
  const Registry& registry_;
};

}  // namespace

std::vector<std::string> builtin_scorer_names() { return {"answer_verify", "grid_match", "render_match"}; }

std::shared_ptr<Scorer> make_scorer(const std::string& name, const Registry& registry) {
  if (name == "grid_match") return std::make_shared<GridMatchScorer>();
  if (name == "render_match") return std::make_shared<RenderMatchScorer>(registry);
  if (name == "answer_verify") return std::make_shared<AnswerVerifyScorer>(registry);
  throw ServiceError(404, "unknown_scorer", "unknown scorer '" + name + "'");
}

// --- batcher -----------------------------------------------------------------------

namespace {

constexpr std::size_t kStatWindow = 100000;

double p99(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(values.size()))) - 1;
  return values[std::min(idx, values.size() - 1)];
}

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

struct Batcher::Impl {
  struct Item {
    RewardRequest request;
    std::promise<RewardResponse> promise;
    Clock::time_point enqueued;
    std::int64_t busy_at_enqueue = 0;
  };

  std::shared_ptr<Scorer> scorer;
  BatchConfig config;
  mutable std::mutex mutex;
  std::condition_variable cv;
  std::deque<std::unique_ptr<Item>> queue;
  bool stopping = false;
  std::uint64_t batch_seq = 0;
  // Scorer work performed so far, in nanoseconds.
  std::atomic<std::int64_t> busy_ns{0};
  BatchStats counters;
  std::deque<double> excess;
  std::deque<double> latency;
  std::thread worker;

  void loop() {
    std::unique_lock lock(mutex);
    for (;;) {
      cv.wait(lock, [&] { return stopping || !queue.empty(); });
      if (queue.empty()) return;
      const auto deadline = queue.front()->enqueued + config.linger;
      cv.wait_until(lock, deadline, [&] {
        return stopping || queue.size() >= static_cast<std::size_t>(config.max_batch);
      });
      std::vector<std::unique_ptr<Item>> batch;
      while (!queue.empty() && batch.size() < static_cast<std::size_t>(config.max_batch)) {
        batch.push_back(std::move(queue.front()));
        queue.pop_front();
      }
      const std::string batch_id = scorer->name() + "-" + std::to_string(++batch_seq);
      lock.unlock();
      run_batch(batch, batch_id);
      lock.lock();
    }
  }

  void run_batch(std::vector<std::unique_ptr<Item>>& batch, const std::string& batch_id) {
    struct Outcome {
      std::optional<ScoreResult> result;
      std::exception_ptr error;
    };
    std::vector<Outcome> outcomes(batch.size());
    auto score_one = [&](std::size_t i) {
      try {
        outcomes[i].result = scorer->score(batch[i]->request);
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    };
    const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
    if (scorer->parallel_safe() && cores > 1 && batch.size() > 1) {
      const auto start = Clock::now();
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      for (unsigned t = 0; t < std::min<std::size_t>(cores, batch.size()); ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) score_one(i);
        });
      }
      for (auto& t : pool) t.join();
      busy_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
    } else {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto start = Clock::now();
        score_one(i);
        busy_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
      }
    }

    const auto done = Clock::now();
    const std::int64_t busy_done = busy_ns.load();
    {
      std::lock_guard guard(mutex);
      ++counters.batches;
      counters.requests += batch.size();
      counters.largest_batch = std::max(counters.largest_batch, static_cast<int>(batch.size()));
      for (const auto& item : batch) {
        const double total = ms_between(item->enqueued, done);
        const double work = static_cast<double>(busy_done - item->busy_at_enqueue) / 1e6;
        latency.push_back(total);
        excess.push_back(std::max(0.0, total - work));
        if (latency.size() > kStatWindow) latency.pop_front();
        if (excess.size() > kStatWindow) excess.pop_front();
      }
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (outcomes[i].error) {
        batch[i]->promise.set_exception(outcomes[i].error);
        continue;
      }
      RewardResponse resp;
      resp.score = outcomes[i].result->score;
      resp.detail = outcomes[i].result->detail;
      resp.scorer_version = scorer->version();
      resp.batch_id = batch_id;
      batch[i]->promise.set_value(std::move(resp));
    }
  }
};

Batcher::Batcher(std::shared_ptr<Scorer> scorer, BatchConfig config) : impl_(std::make_unique<Impl>()) {
  if (config.max_batch < 1) throw std::invalid_argument("max_batch must be >= 1");
  impl_->scorer = std::move(scorer);
  impl_->config = config;
  impl_->worker = std::thread([this] { impl_->loop(); });
}

Batcher::~Batcher() {
  {
    std::lock_guard guard(impl_->mutex);
    impl_->stopping = true;
  }
  impl_->cv.notify_all();
  impl_->worker.join();
}

RewardResponse Batcher::submit(RewardRequest request) {
  auto item = std::make_unique<Impl::Item>();
  item->request = std::move(request);
  auto future = item->promise.get_future();
  {
    std::lock_guard guard(impl_->mutex);
    if (impl_->stopping) throw ServiceError(503, "shutting_down", "batcher stopped");
    item->enqueued = Clock::now();
    item->busy_at_enqueue = impl_->busy_ns.load();
    impl_->queue.push_back(std::move(item));
  }
  impl_->cv.notify_all();
  return future.get();
}

BatchStats Batcher::stats() const {
  std::lock_guard guard(impl_->mutex);
  BatchStats s = impl_->counters;
  s.p99_excess_ms = p99({impl_->excess.begin(), impl_->excess.end()});
  s.p99_latency_ms = p99({impl_->latency.begin(), impl_->latency.end()});
  return s;
}

const Scorer& Batcher::scorer() const { return *impl_->scorer; }

// --- config -------------------------------------------------------------------------

ServiceConfig ServiceConfig::from_json(const Json& j) {
  ServiceConfig c;
  try {
    c.host = j.value("host", c.host);
    c.port = j.value("port", c.port);
    c.max_batch = j.value("max_batch", c.max_batch);
    c.linger_ms = j.value("linger_ms", c.linger_ms);
    c.session_timeout_s = j.value("session_timeout_s", c.session_timeout_s);
    c.threads = j.value("threads", c.threads);
    c.scorers = j.value("scorers", c.scorers);
    c.session_prefix = j.value("session_prefix", c.session_prefix);
  } catch (const Json::exception& e) {
    throw GymError(ErrorCode::kConfig, std::string("service config: ") + e.what());
  }
  if (c.max_batch < 1 || c.linger_ms < 0 || c.session_timeout_s <= 0 || c.threads < 1) {
    throw GymError(ErrorCode::kConfig, "service config: values out of range");
  }
  return c;
}

Json ServiceConfig::to_json() const {
  return Json{{"host", host},       {"port", port},
              {"max_batch", max_batch}, {"linger_ms", linger_ms},
              {"session_timeout_s", session_timeout_s}, {"threads", threads},
              {"scorers", scorers}, {"session_prefix", session_prefix}};
}

void ServiceConfig::apply_env_overrides() {
  auto get = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (!v) return std::nullopt;
    return std::string(v);
  };
  try {
    if (auto v = get("GYMV_HOST")) host = *v;
    if (auto v = get("GYMV_PORT")) port = std::stoi(*v);
    if (auto v = get("GYMV_MAX_BATCH")) max_batch = std::stoi(*v);
    if (auto v = get("GYMV_LINGER_MS")) linger_ms = std::stoi(*v);
    if (auto v = get("GYMV_SESSION_TIMEOUT_S")) session_timeout_s = std::stod(*v);
    if (auto v = get("GYMV_THREADS")) threads = std::stoi(*v);
    if (auto v = get("GYMV_SESSION_PREFIX")) session_prefix = *v;
    if (auto v = get("GYMV_SCORERS")) {
      scorers.clear();
      std::stringstream ss(*v);
      for (std::string s; std::getline(ss, s, ',');) {
        if (!s.empty()) scorers.push_back(s);
      }
    }
  } catch (const std::logic_error&) {
    throw GymError(ErrorCode::kConfig, "malformed GYMV_ environment override");
  }
}

// --- service ------------------------------------------------------------------------

namespace {

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message) {
  send_json(res, status, Json{{"code", code}, {"message", message}});
}

template <typename F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const ServiceError& e) {
    send_error(res, e.status(), e.code(), e.what());
  } catch (const GymError& e) {
    send_error(res, http_status(e.code()), wire_code(e.code()), e.what());
  } catch (const Json::exception& e) {
    send_error(res, 400, "invalid_request", e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, "internal", e.what());
  }
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw ServiceError(400, "invalid_json", e.what());
  }
}

Json to_move_json(const Env& env) { return env.base().to_move(); }

void bind_and_listen(httplib::Server& server, const std::string& host, int port, int& bound) {
  if (port == 0) {
    bound = server.bind_to_any_port(host);
  } else {
    if (!server.bind_to_port(host, port)) bound = -1;
    else bound = port;
  }
  if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
}

}  // namespace

struct Service::Impl {
  struct Session {
    std::mutex mutex;
    std::unique_ptr<Env> env;
    Clock::time_point last_used;
  };

  ServiceConfig config;
  const Registry& registry;
  httplib::Server server;
  std::map<std::string, std::unique_ptr<Batcher>> batchers;

  mutable std::shared_mutex sessions_mutex;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions;
  std::mt19937_64 id_rng{std::random_device{}()};

  std::mutex reaper_mutex;
  std::condition_variable reaper_cv;
  bool stopping = false;
  std::thread reaper;
  std::thread listener;
  int bound_port = -1;

  Impl(ServiceConfig c, const Registry& r) : config(std::move(c)), registry(r) {
    for (const auto& name : config.scorers) {
      batchers.emplace(name, std::make_unique<Batcher>(
                                 make_scorer(name, registry),
                                 BatchConfig{config.max_batch, std::chrono::milliseconds(config.linger_ms)}));
    }
    const int threads = config.threads;
    server.new_task_queue = [threads] { return new httplib::ThreadPool(static_cast<size_t>(threads)); };
    routes();
  }

  std::string new_id() {
    std::ostringstream ss;
    ss << config.session_prefix << '-' << std::hex << id_rng() << id_rng();
    return ss.str();
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::shared_lock lock(sessions_mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw ServiceError(404, "unknown_session", "unknown or expired session '" + id + "'");
    return it->second;
  }

  void reap() {
    const auto timeout = std::chrono::duration<double>(config.session_timeout_s);
    const auto interval = std::clamp<Clock::duration>(
        std::chrono::duration_cast<Clock::duration>(timeout / 4), std::chrono::milliseconds(10), std::chrono::seconds(1));
    std::unique_lock lock(reaper_mutex);
    while (!reaper_cv.wait_for(lock, interval, [&] { return stopping; })) {
      const auto now = Clock::now();
      std::unique_lock guard(sessions_mutex);
      std::erase_if(sessions, [&](const auto& kv) {
        std::unique_lock s(kv.second->mutex, std::try_to_lock);
        return s.owns_lock() && now - kv.second->last_used > timeout;
      });
    }
  }

  void routes() {
    server.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
      std::shared_lock lock(sessions_mutex);
      send_json(res, 200,
                Json{{"status", "ok"},
                     {"sessions", sessions.size()},
                     {"envs", registry.size()},
                     {"scorers", config.scorers}});
    });

    server.Get("/v1/catalog", [this](const httplib::Request&, httplib::Response& res) {
      guarded(res, [&] {
        Json scorers = Json::array();
        for (const auto& [name, b] : batchers) {
          scorers.push_back(Json{{"name", name}, {"version", b->scorer().version()},
                                 {"parallel_safe", b->scorer().parallel_safe()}});
        }
        Json body = registry.manifest();
        body["scorers"] = scorers;
        send_json(res, 200, body);
      });
    });

    server.Get("/v1/stats", [this](const httplib::Request&, httplib::Response& res) {
      Json out = Json::object();
      for (const auto& [name, b] : batchers) {
        const BatchStats s = b->stats();
        out[name] = Json{{"requests", s.requests},
                         {"batches", s.batches},
                         {"largest_batch", s.largest_batch},
                         {"p99_excess_ms", s.p99_excess_ms},
                         {"p99_latency_ms", s.p99_latency_ms}};
      }
      send_json(res, 200, Json{{"scorers", out},
                               {"max_batch", config.max_batch},
                               {"linger_ms", config.linger_ms}});
    });

    server.Post("/v1/envs", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const Json body = parse_body(req);
        if (!body.contains("spec")) throw ServiceError(400, "invalid_spec", "body needs 'spec'");
        const EnvSpec spec = body["spec"].get<EnvSpec>();
        const auto seed = body.value("seed", std::uint64_t{0});
        auto session = std::make_shared<Session>();
        session->env = make(spec, Seed{seed}, registry);
        const auto observations = session->env->reset();
        session->last_used = Clock::now();
        Json out{{"observations", observations_to_json(observations)},
                 {"agents", session->env->base().descriptor().agents},
                 {"to_move", to_move_json(*session->env)}};
        std::string id;
        {
          std::unique_lock lock(sessions_mutex);
          id = new_id();
          sessions.emplace(id, std::move(session));
        }
        out["session_id"] = id;
        send_json(res, 200, out);
      });
    });

    server.Post(R"(/v1/envs/([^/]+)/step)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        auto session = find(req.matches[1]);
        const Json body = parse_body(req);
        if (!body.is_object()) throw ServiceError(400, "invalid_request", "step body must map agent ids to actions");
        AgentMap<std::string> actions;
        for (const auto& [agent, text] : body.items()) {
          if (!text.is_string()) throw ServiceError(400, "invalid_request", "action for " + agent + " must be a string");
          actions[agent] = text.get<std::string>();
        }
        std::lock_guard lock(session->mutex);
        session->last_used = Clock::now();
        const StepResult result = session->env->step(actions);
        Json out = step_result_to_json(result);
        out["to_move"] = to_move_json(*session->env);
        send_json(res, 200, out);
      });
    });

    server.Post(R"(/v1/envs/([^/]+)/reset)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        auto session = find(req.matches[1]);
        std::lock_guard lock(session->mutex);
        session->last_used = Clock::now();
        const auto observations = session->env->reset();
        send_json(res, 200, Json{{"observations", observations_to_json(observations)},
                                 {"to_move", to_move_json(*session->env)}});
      });
    });

    server.Delete(R"(/v1/envs/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        std::unique_lock lock(sessions_mutex);
        if (sessions.erase(req.matches[1]) == 0) {
          throw ServiceError(404, "unknown_session", "unknown or expired session '" + std::string(req.matches[1]) + "'");
        }
        send_json(res, 200, Json{{"deleted", std::string(req.matches[1])}});
      });
    });

    server.Post("/v1/generate", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        RewardRequest request = RewardRequest::from_json(parse_body(req));
        auto it = batchers.find(request.model);
        if (it == batchers.end()) {
          throw ServiceError(404, "unknown_scorer", "unknown scorer '" + request.model + "'");
        }
        send_json(res, 200, it->second->submit(std::move(request)).to_json());
      });
    });
  }
};

Service::Service(ServiceConfig config, const Registry& registry)
    : impl_(std::make_unique<Impl>(std::move(config), registry)) {}

Service::~Service() { stop(); }

int Service::start() {
  bind_and_listen(impl_->server, impl_->config.host, impl_->config.port, impl_->bound_port);
  impl_->reaper = std::thread([this] { impl_->reap(); });
  impl_->listener = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->bound_port;
}

void Service::run() {
  bind_and_listen(impl_->server, impl_->config.host, impl_->config.port, impl_->bound_port);
  impl_->reaper = std::thread([this] { impl_->reap(); });
  impl_->server.listen_after_bind();
}

void Service::stop() {
  impl_->server.stop();
  {
    std::lock_guard lock(impl_->reaper_mutex);
    impl_->stopping = true;
  }
  impl_->reaper_cv.notify_all();
  if (impl_->listener.joinable()) impl_->listener.join();
  if (impl_->reaper.joinable()) impl_->reaper.join();
}

int Service::port() const { return impl_->bound_port; }

std::size_t Service::session_count() const {
  std::shared_lock lock(impl_->sessions_mutex);
  return impl_->sessions.size();
}

// --- proxy ---------------------------------------------------------------------------

struct Proxy::Impl {
  std::vector<std::string> upstreams;
  std::string host;
  int port = 0;
  int bound_port = -1;
  std::atomic<std::size_t> next{0};
  httplib::Server server;
  std::thread listener;

  std::size_t route(const std::string& path) {
    static const std::regex session_path(R"(^/v1/envs/([^/]+))");
    std::smatch m;
    if (std::regex_search(path, m, session_path)) {
      const std::string id = m[1];
      for (std::size_t i = 0; i < upstreams.size(); ++i) {
        if (id.rfind(worker_prefix(i) + "-", 0) == 0) return i;
      }
    }
    return next++ % upstreams.size();
  }

  void forward(const httplib::Request& req, httplib::Response& res) {
    const std::size_t target = route(req.path);
    httplib::Client client(upstreams[target]);
    client.set_read_timeout(120, 0);
    httplib::Result r;
    std::string type = req.get_header_value("Content-Type");
    if (type.empty()) type = "application/json";
    if (req.method == "GET") r = client.Get(req.path);
    else if (req.method == "DELETE") r = client.Delete(req.path);
    else r = client.Post(req.path, req.body, type);
    if (!r) {
      send_error(res, 502, "bad_gateway", "upstream " + upstreams[target] + ": " + httplib::to_string(r.error()));
      return;
    }
    res.status = r->status;
    std::string out_type = r->get_header_value("Content-Type");
    res.set_content(r->body, out_type.empty() ? "application/json" : out_type);
  }
};

std::string Proxy::worker_prefix(std::size_t index) { return "w" + std::to_string(index); }

Proxy::Proxy(std::vector<std::string> upstreams, std::string host, int port) : impl_(std::make_unique<Impl>()) {
  if (upstreams.empty()) throw std::invalid_argument("proxy needs at least one upstream");
  impl_->upstreams = std::move(upstreams);
  impl_->host = std::move(host);
  impl_->port = port;
  impl_->server.new_task_queue = [] { return new httplib::ThreadPool(64); };
  auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->forward(req, res); };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Delete(".*", handler);
}

Proxy::~Proxy() { stop(); }

int Proxy::start() {
  bind_and_listen(impl_->server, impl_->host, impl_->port, impl_->bound_port);
  impl_->listener = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->bound_port;
}

void Proxy::run() {
  bind_and_listen(impl_->server, impl_->host, impl_->port, impl_->bound_port);
  impl_->server.listen_after_bind();
}

void Proxy::stop() {
  impl_->server.stop();
  if (impl_->listener.joinable()) impl_->listener.join();
}

int Proxy::port() const { return impl_->bound_port; }

}  // namespace gymv
