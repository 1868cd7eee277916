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

// HTTP session API over the reset/step protocol plus the batched reward
// endpoint.

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gymv/image.hpp"
#include "gymv/registry.hpp"
#include "gymv/types.hpp"

namespace gymv {

/// Request failure carrying the HTTP status and the wire error code.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }

 private:
  int status_;
  std::string code_;
};

/// HTTP status and wire code for a protocol error.
int http_status(ErrorCode code);
std::string wire_code(ErrorCode code);

// --- scoring -----------------------------------------------------------------

struct RewardRequest {
  std::string model;
  std::string prompt;
  /// Raw base64 text from multimodal_outputs.image; may be empty.
  std::string image_base64;
  Json metadata = Json::object();

  /// Parses the wire body. Throws ServiceError(400) on a malformed shape.
  static RewardRequest from_json(const Json& j);
  Json to_json() const;
};

struct RewardResponse {
  double score = 0.0;
  std::string detail;
  std::string scorer_version;
  std::string batch_id;

  Json to_json() const;
  static RewardResponse from_json(const Json& j);
};

struct ScoreResult {
  double score = 0.0;
  std::string detail;
};

/// Reward backend. score() must be a pure function of the request.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string name() const = 0;
  virtual std::string version() const = 0;
  /// True when score() may run concurrently with itself.
  virtual bool parallel_safe() const { return true; }
  /// Throws ServiceError(422) on an undecodable image, 400 on bad metadata.
  virtual ScoreResult score(const RewardRequest& request) const = 0;
};

/// Shipped rule-based scorers: grid_match, render_match, answer_verify.
/// Throws ServiceError(404) for any other name.
std::shared_ptr<Scorer> make_scorer(const std::string& name, const Registry& registry = Registry::builtin());
std::vector<std::string> builtin_scorer_names();

struct BatchConfig {
  int max_batch = 32;
  std::chrono::milliseconds linger{20};
};

struct BatchStats {
  std::uint64_t requests = 0;
  std::uint64_t batches = 0;
  int largest_batch = 0;
  /// Time a request spent waiting beyond the scorer work queued ahead of it.
  double p99_excess_ms = 0.0;
  double p99_latency_ms = 0.0;
};

/// Coalesces concurrent requests into batches (max size or linger, whichever
/// first) and demultiplexes the results.
class Batcher {
 public:
  Batcher(std::shared_ptr<Scorer> scorer, BatchConfig config);
  ~Batcher();
  Batcher(const Batcher&) = delete;
  Batcher& operator=(const Batcher&) = delete;

  /// Blocks until the request's batch has been scored; rethrows scorer errors.
  RewardResponse submit(RewardRequest request);
  BatchStats stats() const;
  const Scorer& scorer() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// --- service -----------------------------------------------------------------

struct ServiceConfig {
  std::string host = "127.0.0.1";
  /// 0 binds an ephemeral port.
  int port = 8080;
  int max_batch = 32;
  int linger_ms = 20;
  double session_timeout_s = 600.0;
  int threads = 64;
  std::vector<std::string> scorers = builtin_scorer_names();
  /// Prepended to session ids so a proxy can route by id.
  std::string session_prefix = "s";

  static ServiceConfig from_json(const Json& j);
  Json to_json() const;
  /// Applies GYMV_HOST, GYMV_PORT, GYMV_MAX_BATCH, GYMV_LINGER_MS,
  /// GYMV_SESSION_TIMEOUT_S, GYMV_THREADS, GYMV_SCORERS, GYMV_SESSION_PREFIX.
  void apply_env_overrides();
};

class Service {
 public:
  explicit Service(ServiceConfig config, const Registry& registry = Registry::builtin());
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds and serves on a background thread; returns the bound port.
  int start();
  /// Serves on the calling thread until stop().
  void run();
  void stop();
  int port() const;
  std::size_t session_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Dumb round-robin front for N service replicas. Session routes go to the
/// replica whose session prefix ("w<i>") starts the id.
class Proxy {
 public:
  Proxy(std::vector<std::string> upstreams, std::string host = "127.0.0.1", int port = 0);
  ~Proxy();
  Proxy(const Proxy&) = delete;
  Proxy& operator=(const Proxy&) = delete;

  int start();
  void run();
  void stop();
  int port() const;

  static std::string worker_prefix(std::size_t index);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gymv
