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
// gymv command-line entry point.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "gymv/agents.hpp"
#include "gymv/episode.hpp"
#include "gymv/harness.hpp"
#include "gymv/metrics.hpp"
#include "gymv/service.hpp"
#include "gymv/wrappers.hpp"

namespace fs = std::filesystem;
using namespace gymv;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string s; std::getline(ss, s, ',');) {
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

struct AgentOptions {
  std::string name = "oracle";
  std::string base_url;
  std::string model = "default";
  std::string config_file;

  void add(CLI::App* cmd) {
    cmd->add_option("--agent", name, "random, oracle or remote")->check(CLI::IsMember({"random", "oracle", "remote"}));
    cmd->add_option("--base-url", base_url, "remote agent endpoint, e.g. http://127.0.0.1:8000");
    cmd->add_option("--model", model, "remote model name");
    cmd->add_option("--agent-config", config_file, "JSON file with remote agent settings");
  }

  AgentFactory factory() const {
    Json cfg = config_file.empty() ? Json::object() : read_json_file(config_file);
    if (!base_url.empty()) cfg["base_url"] = base_url;
    if (!cfg.contains("model")) cfg["model"] = model;
    if (const char* key = std::getenv("GYMV_API_KEY"); key && !cfg.contains("api_key")) cfg["api_key"] = key;
    return agent_factory(name, cfg);
  }
};

EnvSpec spec_for(const std::string& env, int level, const std::string& wrappers_file) {
  EnvSpec spec;
  spec.env_id = env;
  spec.difficulty = level;
  if (!wrappers_file.empty()) spec.wrappers = read_json_file(wrappers_file).get<std::vector<WrapperConfig>>();
  return spec;
}

int cmd_list(bool as_json) {
  const Registry& reg = Registry::builtin();
  if (as_json) {
    std::cout << reg.manifest().dump(2) << '\n';
    return 0;
  }
  std::cout << std::left << std::setw(20) << "env" << std::setw(13) << "category" << std::setw(12) << "mode"
            << "levels\n";
  for (const auto& d : reg.catalog()) {
    std::string levels;
    for (const auto& [level, params] : d.difficulty.levels) levels += (levels.empty() ? "" : ",") + std::to_string(level);
    std::cout << std::setw(20) << d.env_id << std::setw(13) << to_string(d.category) << std::setw(12)
              << to_string(d.mode) << levels << '\n';
  }
  return 0;
}

int cmd_render(const std::string& env, std::uint64_t seed, int level, const std::string& out, bool show_text) {
  EnvSpec spec = spec_for(env, level, "");
  auto instance = make_instance(spec, Seed{seed});
  const auto obs = instance->reset();
  const std::string path = out.empty() ? env + "_d" + std::to_string(level) + "_s" + std::to_string(seed) + ".png" : out;
  const auto& first = obs.begin()->second;
  const auto png = encode_png(first.image);
  write_text(path, std::string(png.begin(), png.end()));
  std::cout << "wrote " << path << " (" << first.image.width() << "x" << first.image.height() << ")\n";
  if (show_text) {
    std::cout << first.prompt() << "\n\n[Caption]\n" << instance->game().caption(obs.begin()->first) << '\n';
  }
  return 0;
}

int cmd_play(const std::string& env, const AgentOptions& agent, std::uint64_t seed, int level, int k,
             const std::string& wrappers_file, const std::string& out, bool verbose) {
  const EnvSpec spec = spec_for(env, level, wrappers_file);
  auto batch = run_episodes(agent.factory(), spec, {seed}, k);
  for (const auto& rec : batch) {
    std::cout << "rollout " << rec.rollout << ": " << rec.transitions.size() << " steps, score "
              << format_number(rec.final_score);
    for (const auto& [id, r] : rec.returns) std::cout << "  " << id << "=" << format_number(r);
    if (rec.error) std::cout << "  error: " << *rec.error;
    std::cout << '\n';
    if (verbose) {
      for (std::size_t t = 0; t < rec.transitions.size(); ++t) {
        for (const auto& [id, a] : rec.transitions[t].actions) {
          std::cout << "  t=" << t << " " << id << " -> " << a << "  reward "
                    << format_number(rec.transitions[t].result.rewards.at(id)) << '\n';
        }
      }
    }
  }
  if (!out.empty()) {
    write_batch(batch, out, ImageStorage::kFiles);
    std::cout << "wrote " << out << '\n';
  }
  return 0;
}

std::atomic<bool> g_stop{false};

int cmd_serve(const std::string& config_file, const std::string& host, int port, int workers) {
  ServiceConfig config = config_file.empty() ? ServiceConfig{} : ServiceConfig::from_json(read_json_file(config_file));
  config.apply_env_overrides();
  if (!host.empty()) config.host = host;
  if (port >= 0) config.port = port;

  std::signal(SIGINT, [](int) { g_stop = true; });
  std::signal(SIGTERM, [](int) { g_stop = true; });

  std::vector<std::unique_ptr<Service>> replicas;
  std::unique_ptr<Proxy> proxy;
  if (workers <= 1) {
    replicas.push_back(std::make_unique<Service>(config));
    std::cout << "gymv serving on " << config.host << ":" << replicas.back()->start() << std::endl;
  } else {
    std::vector<std::string> upstreams;
    for (int i = 0; i < workers; ++i) {
      ServiceConfig c = config;
      c.port = 0;
      c.session_prefix = Proxy::worker_prefix(static_cast<std::size_t>(i));
      replicas.push_back(std::make_unique<Service>(c));
      upstreams.push_back("http://" + c.host + ":" + std::to_string(replicas.back()->start()));
    }
    proxy = std::make_unique<Proxy>(upstreams, config.host, config.port);
    std::cout << "gymv proxy on " << config.host << ":" << proxy->start() << " over " << workers << " workers"
              << std::endl;
  }
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(200));
  if (proxy) proxy->stop();
  for (auto& r : replicas) r->stop();
  return 0;
}

int cmd_eval(const AgentOptions& agent, const std::string& envs, const std::string& levels, int seeds,
             std::uint64_t first_seed, int k, int threads, bool clip, const std::string& out_dir) {
  const Registry& reg = Registry::builtin();
  std::vector<std::string> ids = envs.empty() ? std::vector<std::string>{} : split_list(envs);
  if (ids.empty()) {
    for (const auto& d : reg.catalog()) ids.push_back(d.env_id);
  }
  const auto factory = agent.factory();
  EpisodeBatch all;
  for (const auto& id : ids) {
    for (const auto& lv : split_list(levels)) {
      EnvSpec spec = spec_for(id, std::stoi(lv), "");
      auto batch = run_episodes(factory, spec, seed_range(first_seed, seeds), k, threads);
      std::move(batch.begin(), batch.end(), std::back_inserter(all));
    }
  }
  const EvalReport report = build_report(all, k, clip);
  fs::create_directories(out_dir);
  write_batch(all, fs::path(out_dir) / "batch.jsonl", ImageStorage::kFiles);
  write_text(fs::path(out_dir) / "report.json", report.to_json().dump(2) + "\n");
  std::cout << std::left << std::fixed << std::setprecision(4) << std::setw(20) << "env" << std::setw(12) << "mean@k" << "rho\n";
  for (const auto& [env, v] : report.per_env) {
    std::cout << std::setw(20) << env << std::setw(12) << v << report.robustness.at(env) << '\n';
  }
  std::cout << "wrote " << (fs::path(out_dir) / "report.json").string() << " and batch.jsonl\n";
  return 0;
}

int cmd_sweep(const AgentOptions& agent, const std::string& env, int n, int k, std::uint64_t first_seed,
              int threads, const std::string& out) {
  const SweepResult sweep = difficulty_sweep(agent.factory(), env, {0, 1, 2}, n, k, first_seed, threads);
  const std::string csv = sweep.csv();
  if (!out.empty()) write_text(out, csv);
  std::cout << csv;
  std::cout << "rho: " << (sweep.rho ? format_number(*sweep.rho) : "n/a") << '\n';
  std::cout << "non-increasing at 95%: " << (sweep.non_increasing ? "yes" : "no") << '\n';
  return 0;
}

// Category score (x100) = mean of per-env mean@k over the envs of that category.
std::map<std::string, double> category_scores(const EvalReport& report) {
  const Registry& reg = Registry::builtin();
  std::map<std::string, std::vector<double>> by_cat;
  for (const auto& [env, v] : report.per_env) {
    by_cat[std::string(to_string(reg.at(env).descriptor.category))].push_back(v);
  }
  std::map<std::string, double> out;
  for (const auto& [cat, vs] : by_cat) {
    double s = 0;
    for (double v : vs) s += v;
    out[cat] = 100.0 * s / static_cast<double>(vs.size());
  }
  return out;
}

int cmd_transfer(const std::string& matrix_file, const std::string& baseline_file,
                 const std::vector<std::string>& runs, const std::string& out) {
  TransferMatrix m;
  if (!matrix_file.empty()) {
    m = TransferMatrix::from_json(read_json_file(matrix_file));
  } else {
    if (baseline_file.empty() || runs.empty()) {
      throw std::invalid_argument("give a matrix file, or --baseline with one or more --run Source=report.json");
    }
    const auto base = category_scores(EvalReport::from_json(read_json_file(baseline_file)));
    for (const auto& [cat, v] : base) {
      m.targets.push_back(cat);
      m.baseline.push_back(v);
    }
    for (const auto& run : runs) {
      const auto eq = run.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--run expects Source=report.json");
      m.sources.push_back(run.substr(0, eq));
      const auto scores = category_scores(EvalReport::from_json(read_json_file(run.substr(eq + 1))));
      std::vector<double> row;
      for (const auto& t : m.targets) {
        auto it = scores.find(t);
        if (it == scores.end()) throw std::invalid_argument("report for " + m.sources.back() + " lacks category " + t);
        row.push_back(it->second);
      }
      m.cells.push_back(row);
    }
  }
  const auto deltas = m.deltas();
  std::ostringstream csv;
  csv << "source,target,cell,baseline,delta" << (m.stored_deltas ? ",stored_delta" : "") << '\n';
  for (std::size_t s = 0; s < m.sources.size(); ++s) {
    for (std::size_t t = 0; t < m.targets.size(); ++t) {
      csv << m.sources[s] << ',' << m.targets[t] << ',' << format_number(m.cells[s][t]) << ','
          << format_number(m.baseline[t]) << ',' << format_number(deltas[s][t]);
      if (m.stored_deltas) csv << ',' << format_number((*m.stored_deltas)[s][t]);
      csv << '\n';
    }
  }
  if (!out.empty()) write_text(out, csv.str());
  std::cout << std::left << std::setw(14) << "source" << std::setw(12) << "breadth";
  if (m.stored_deltas) std::cout << std::setw(16) << "stored breadth" << "max |delta gap|";
  std::cout << '\n' << std::fixed << std::setprecision(2);
  for (std::size_t s = 0; s < m.sources.size(); ++s) {
    std::cout << std::setw(14) << m.sources[s] << std::setw(12) << m.breadth(s);
    if (m.stored_deltas) std::cout << std::setw(16) << m.stored_breadth(s) << m.max_delta_gap(s);
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& report_file, const std::string& batch_file) {
  const EvalReport report = EvalReport::from_json(read_json_file(report_file));
  const EpisodeBatch batch = read_batch(batch_file);
  const VerifyOutcome v = verify_report(report, batch);
  if (v.ok) {
    std::cout << "report verified: every value recomputes from " << batch.size() << " episodes\n";
    return 0;
  }
  for (const auto& p : v.problems) std::cout << "mismatch: " << p << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gymv: procedurally generated visual environments"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "list registered environments");
  list->add_flag("--json", list_json, "print the manifest");

  std::string env;
  std::uint64_t seed = 0;
  int level = 0;
  std::string out;
  bool show_text = false;
  auto* render = app.add_subcommand("render", "render the first observation to PNG");
  render->add_option("env", env)->required();
  render->add_option("--seed", seed);
  render->add_option("--level", level);
  render->add_option("-o,--out", out);
  render->add_flag("--text", show_text, "also print the prompt and caption");

  AgentOptions play_agent;
  int k = 1;
  std::string wrappers_file;
  bool verbose = false;
  auto* play = app.add_subcommand("play", "run an agent on one seed");
  play->add_option("env", env)->required();
  play_agent.add(play);
  play->add_option("--seed", seed);
  play->add_option("--level", level);
  play->add_option("-k", k, "rollouts");
  play->add_option("--wrappers", wrappers_file, "JSON list of wrapper configs");
  play->add_option("-o,--out", out, "write the episode batch (JSONL)");
  play->add_flag("-v,--verbose", verbose);

  std::string config_file;
  std::string host;
  int port = -1;
  int workers = 1;
  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--config", config_file, "service config JSON");
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--workers", workers, "replicas behind a round-robin proxy");

  AgentOptions eval_agent;
  std::string envs;
  std::string levels = "0,1,2";
  int seeds = 20;
  std::uint64_t first_seed = 0;
  int threads = 1;
  bool clip = false;
  std::string out_dir = "eval_out";
  int eval_k = 3;
  auto* eval = app.add_subcommand("eval", "evaluate an agent and write report + batch");
  eval_agent.add(eval);
  eval->add_option("--envs", envs, "comma list (default: all)");
  eval->add_option("--levels", levels);
  eval->add_option("--seeds", seeds, "instances per level");
  eval->add_option("--first-seed", first_seed);
  eval->add_option("-k", eval_k, "rollouts per instance");
  eval->add_option("--threads", threads);
  eval->add_flag("--clip-negatives", clip);
  eval->add_option("--out-dir", out_dir);

  AgentOptions sweep_agent;
  sweep_agent.name = "random";
  int n = 500;
  int sweep_k = 1;
  auto* sweep = app.add_subcommand("sweep", "accuracy per difficulty level (CSV)");
  sweep->add_option("env", env)->required();
  sweep_agent.add(sweep);
  sweep->add_option("-n", n, "seeds per level");
  sweep->add_option("-k", sweep_k);
  sweep->add_option("--first-seed", first_seed);
  sweep->add_option("--threads", threads);
  sweep->add_option("-o,--out", out);

  std::string matrix_file;
  std::string baseline_file;
  std::vector<std::string> runs;
  auto* transfer = app.add_subcommand("transfer", "transfer deltas and breadth");
  transfer->add_option("matrix", matrix_file, "matrix JSON (sources, targets, baseline, cells[, deltas])");
  transfer->add_option("--baseline", baseline_file, "zero-shot eval report");
  transfer->add_option("--run", runs, "Source=report.json, repeatable");
  transfer->add_option("-o,--out", out, "CSV output");

  std::string report_file;
  std::string batch_file;
  auto* verify = app.add_subcommand("verify-report", "recompute a report from its batch");
  verify->add_option("report", report_file)->required();
  verify->add_option("batch", batch_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return cmd_list(list_json);
    if (*render) return cmd_render(env, seed, level, out, show_text);
    if (*play) return cmd_play(env, play_agent, seed, level, k, wrappers_file, out, verbose);
    if (*serve) return cmd_serve(config_file, host, port, workers);
    if (*eval) return cmd_eval(eval_agent, envs, levels, seeds, first_seed, eval_k, threads, clip, out_dir);
    if (*sweep) return cmd_sweep(sweep_agent, env, n, sweep_k, first_seed, threads, out);
    if (*transfer) return cmd_transfer(matrix_file, baseline_file, runs, out);
    if (*verify) return cmd_verify(report_file, batch_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
