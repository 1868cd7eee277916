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
#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <set>

#include "common.hpp"
#include "gymv/envs/singleturn.hpp"

namespace gymv::envs {

namespace {

/// Random connected simple graph: a random spanning tree plus independent
/// extra edges.
std::vector<std::pair<int, int>> random_connected_graph(int nodes, double extra_prob, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) perm[static_cast<std::size_t>(i)] = i;
  rng.shuffle(perm);
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) { edges.emplace(std::min(a, b), std::max(a, b)); };
  for (int i = 1; i < nodes; ++i) {
    add(perm[static_cast<std::size_t>(i)], perm[rng.index(static_cast<std::size_t>(i))]);
  }
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      if (!edges.count({a, b}) && rng.bernoulli(extra_prob)) add(a, b);
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace

// --- ShortestPath -----------------------------------------------------------

std::pair<int, std::vector<int>> ShortestPath::solve(const Instance& inst) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(inst.nodes));
  for (const auto& e : inst.edges) {
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
  }
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(inst.nodes), kInf);
  std::vector<int> prev(static_cast<std::size_t>(inst.nodes), -1);
  using Item = std::pair<int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[static_cast<std::size_t>(inst.source)] = 0;
  pq.emplace(0, inst.source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (auto [v, w] : adj[static_cast<std::size_t>(u)]) {
      // Ties broken toward the smaller predecessor id for a canonical path.
      auto& dv = dist[static_cast<std::size_t>(v)];
      if (d + w < dv || (d + w == dv && u < prev[static_cast<std::size_t>(v)])) {
        const bool improved = d + w < dv;
        dv = d + w;
        prev[static_cast<std::size_t>(v)] = u;
        if (improved) pq.emplace(dv, v);
      }
    }
  }
  const int best = dist[static_cast<std::size_t>(inst.target)];
  if (best == kInf) return {-1, {}};
  std::vector<int> path;
  for (int v = inst.target; v != -1; v = prev[static_cast<std::size_t>(v)]) {
    path.push_back(v);
    if (v == inst.source) break;
  }
  std::reverse(path.begin(), path.end());
  return {best, path};
}

ShortestPath::Instance ShortestPath::generate(const Json& params, Rng& rng) {
  const int nodes = param_int(params, "node_count");
  const double extra = param_double(params, "extra_edge_prob");
  const int max_weight = param_int(params, "max_weight");
  return generate_until_valid("shortest_path", [&]() -> std::optional<Instance> {
    Instance inst;
    inst.nodes = nodes;
    for (auto [u, v] : random_connected_graph(nodes, extra, rng)) {
      inst.edges.push_back({u, v, static_cast<int>(rng.uniform_int(1, max_weight))});
    }
    inst.source = static_cast<int>(rng.index(static_cast<std::size_t>(nodes)));
    inst.target = static_cast<int>(rng.index(static_cast<std::size_t>(nodes - 1)));
    if (inst.target >= inst.source) ++inst.target;
    if (solve(inst).second.size() < 3) return std::nullopt;
    return inst;
  });
}

Verdict ShortestPath::verify(const Instance& inst, std::string_view answer) {
  const ActionParse parsed = parse_action(answer, Grammar::kIntegerSequence);
  const auto* a = as_action(parsed);
  if (a == nullptr) return Verdict::fail("parse");
  const auto& seq = a->values;
  if (seq.front() != inst.source || seq.back() != inst.target) return Verdict::fail("wrong endpoints");
  long long total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const auto it = std::find_if(inst.edges.begin(), inst.edges.end(), [&](const WeightedEdge& e) {
      return (e.u == seq[i] && e.v == seq[i + 1]) || (e.v == seq[i] && e.u == seq[i + 1]);
    });
    if (it == inst.edges.end()) return Verdict::fail("invalid edge");
    total += it->weight;
  }
  if (total != solve(inst).first) return Verdict::fail("suboptimal");
  return Verdict::pass();
}

std::string ShortestPath::answer(const Instance& inst) { return detail::join_ints(solve(inst).second); }

std::string ShortestPath::question(const Instance& inst) {
  return "Find a shortest (minimum total weight) path from node " + std::to_string(inst.source) +
         " (cyan) to node " + std::to_string(inst.target) +
         " (red). Edge labels are weights. Answer with the node sequence, e.g. \"" +
         std::to_string(inst.source) + " ... " + std::to_string(inst.target) + "\".";
}

std::string ShortestPath::caption(const Instance& inst) {
  std::string out = "Nodes 0.." + std::to_string(inst.nodes - 1) + "; source " +
                    std::to_string(inst.source) + ", target " + std::to_string(inst.target) + "; edges:";
  for (const auto& e : inst.edges) {
    out += " " + std::to_string(e.u) + "-" + std::to_string(e.v) + ":" + std::to_string(e.weight);
  }
  return out;
}

RasterImage ShortestPath::render(const Instance& inst, const StyleConfig& style) {
  GraphDrawing g;
  g.node_count = inst.nodes;
  for (const auto& e : inst.edges) g.edges.push_back({e.u, e.v, e.weight});
  g.source = inst.source;
  g.target = inst.target;
  return render_graph(g, style);
}

std::string ShortestPath::random_answer(const Instance& inst, Rng& rng) {
  std::vector<int> walk{inst.source};
  for (int i = 0; i < 2 * inst.nodes && walk.back() != inst.target; ++i) {
    std::vector<int> next;
    for (const auto& e : inst.edges) {
      if (e.u == walk.back()) next.push_back(e.v);
      if (e.v == walk.back()) next.push_back(e.u);
    }
    walk.push_back(next[rng.index(next.size())]);
  }
  return detail::join_ints(walk);
}

// --- LongestPathLen ---------------------------------------------------------

int LongestPathLen::solve(const Instance& inst) {
  const int n = inst.nodes;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : inst.edges) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  // ends[mask]: vertices at which some simple path visiting exactly `mask` ends.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t e = ends[mask];
    if (e == 0) continue;
    best = std::max(best, std::popcount(mask) - 1);
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t next = adj[static_cast<std::size_t>(v)] & ~mask;
      while (next) {
        const int u = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return best;
}

LongestPathLen::Instance LongestPathLen::generate(const Json& params, Rng& rng) {
  const int nodes = param_int(params, "node_count");
  if (nodes > 20) throw GymError(ErrorCode::kConfig, "longest_path_len supports at most 20 nodes");
  const double extra = param_double(params, "extra_edge_prob");
  return Instance{nodes, random_connected_graph(nodes, extra, rng)};
}

Verdict LongestPathLen::verify(const Instance& inst, std::string_view answer) {
  return detail::verify_integer(answer, solve(inst));
}

std::string LongestPathLen::answer(const Instance& inst) { return std::to_string(solve(inst)); }

std::string LongestPathLen::question(const Instance&) {
  return "What is the length (number of edges) of the longest simple path in this graph? A simple "
         "path never visits a node twice. Answer with a single integer.";
}

std::string LongestPathLen::caption(const Instance& inst) {
  std::string out = "Nodes 0.." + std::to_string(inst.nodes - 1) + "; edges:";
  for (auto [u, v] : inst.edges) out += " " + std::to_string(u) + "-" + std::to_string(v);
  return out;
}

RasterImage LongestPathLen::render(const Instance& inst, const StyleConfig& style) {
  GraphDrawing g;
  g.node_count = inst.nodes;
  for (auto [u, v] : inst.edges) g.edges.push_back({u, v, std::nullopt});
  return render_graph(g, style);
}

std::string LongestPathLen::random_answer(const Instance& inst, Rng& rng) {
  return std::to_string(rng.uniform_int(1, inst.nodes - 1));
}

}  // namespace gymv::envs
