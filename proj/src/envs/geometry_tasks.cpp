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
#include <cmath>
#include <numeric>
#include <set>

#include "common.hpp"
#include "gymv/envs/singleturn.hpp"

namespace gymv::envs {

namespace {

using Line = VisibleLine::Line;

/// Upper envelope of lines (max over x). With `keep_touching`, a line meeting
/// the envelope at a single point is kept. Returns 0-based indices.
std::vector<int> envelope(const std::vector<Line>& lines, bool keep_touching) {
  std::vector<int> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& la = lines[static_cast<std::size_t>(a)];
    const auto& lb = lines[static_cast<std::size_t>(b)];
    if (la.slope != lb.slope) return la.slope < lb.slope;
    return la.intercept > lb.intercept;
  });
  std::vector<int> stack;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int idx = order[i];
    const Line& l3 = lines[static_cast<std::size_t>(idx)];
    if (!stack.empty() && lines[static_cast<std::size_t>(stack.back())].slope == l3.slope) continue;
    while (stack.size() >= 2) {
      const Line& l1 = lines[static_cast<std::size_t>(stack[stack.size() - 2])];
      const Line& l2 = lines[static_cast<std::size_t>(stack.back())];
      // x13 vs x12 with positive denominators (slopes strictly increasing).
      const long long lhs = static_cast<long long>(l1.intercept - l3.intercept) * (l2.slope - l1.slope);
      const long long rhs = static_cast<long long>(l1.intercept - l2.intercept) * (l3.slope - l1.slope);
      const bool drop = keep_touching ? lhs < rhs : lhs <= rhs;
      if (!drop) break;
      stack.pop_back();
    }
    stack.push_back(idx);
  }
  return stack;
}

}  // namespace

// --- VisibleLine ------------------------------------------------------------

std::vector<int> VisibleLine::solve(const std::vector<Line>& lines) {
  std::vector<int> out = envelope(lines, true);
  for (auto& v : out) ++v;
  std::sort(out.begin(), out.end());
  return out;
}

bool VisibleLine::degenerate(const std::vector<Line>& lines) {
  std::set<std::pair<int, int>> seen;
  for (const auto& l : lines) {
    if (!seen.emplace(l.slope, l.intercept).second) return true;
  }
  return envelope(lines, true).size() != envelope(lines, false).size();
}

Viewport VisibleLine::viewport(const std::vector<Line>& lines) {
  double lo = -5;
  double hi = 5;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      const double x = static_cast<double>(lines[j].intercept - lines[i].intercept) /
                       static_cast<double>(lines[i].slope - lines[j].slope);
      lo = std::min(lo, std::floor(x) - 2);
      hi = std::max(hi, std::ceil(x) + 2);
    }
  }
  double ylo = 1e18;
  double yhi = -1e18;
  for (const auto& l : lines) {
    for (double x : {lo, hi}) {
      const double y = l.slope * x + l.intercept;
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  if (yhi - ylo < 2) {
    ylo -= 1;
    yhi += 1;
  }
  return {lo, hi, std::floor(ylo) - 1, std::ceil(yhi) + 1};
}

VisibleLine::Instance VisibleLine::generate(const Json& params, Rng& rng) {
  const int count = param_int(params, "line_count");
  const int slope_range = param_int(params, "slope_range");
  const int intercept_range = param_int(params, "intercept_range");
  return generate_until_valid("visible_line", [&]() -> std::optional<Instance> {
    Instance inst;
    for (int i = 0; i < count; ++i) {
      inst.lines.push_back({static_cast<int>(rng.uniform_int(-slope_range, slope_range)),
                            static_cast<int>(rng.uniform_int(-intercept_range, intercept_range))});
    }
    if (degenerate(inst.lines)) return std::nullopt;
    return inst;
  });
}

Verdict VisibleLine::verify(const Instance& inst, std::string_view answer) {
  const ActionParse parsed = parse_action(answer, Grammar::kIntegerSequence);
  const auto* a = as_action(parsed);
  if (a == nullptr) return Verdict::fail("parse");
  std::set<long long> given(a->values.begin(), a->values.end());
  const auto truth = solve(inst.lines);
  const std::set<long long> expected(truth.begin(), truth.end());
  if (given != expected) return Verdict::fail("wrong set");
  return Verdict::pass();
}

std::string VisibleLine::answer(const Instance& inst) { return detail::join_ints(solve(inst.lines)); }

std::string VisibleLine::question(const Instance& inst) {
  return "The plot shows " + std::to_string(inst.lines.size()) +
         " lines y = Ax + B, each labeled with its index. Which lines are visible from y = +infinity, "
         "i.e. attain the maximum y over all lines for some x? Answer with the space-separated "
         "indices.";
}

std::string VisibleLine::caption(const Instance& inst) {
  std::string out = "Lines:";
  for (std::size_t i = 0; i < inst.lines.size(); ++i) {
    out += "\n" + std::to_string(i + 1) + ": y = " + std::to_string(inst.lines[i].slope) + "x + " +
           std::to_string(inst.lines[i].intercept);
  }
  return out;
}

RasterImage VisibleLine::render(const Instance& inst, const StyleConfig& style) {
  std::vector<Line2> lines;
  for (const auto& l : inst.lines) lines.push_back({double(l.slope), double(l.intercept)});
  return render_lines(lines, viewport(inst.lines), style);
}

std::string VisibleLine::random_answer(const Instance& inst, Rng& rng) {
  std::vector<int> chosen;
  for (std::size_t i = 0; i < inst.lines.size(); ++i) {
    if (rng.bernoulli(0.5)) chosen.push_back(static_cast<int>(i + 1));
  }
  if (chosen.empty()) chosen.push_back(static_cast<int>(rng.index(inst.lines.size()) + 1));
  return detail::join_ints(chosen);
}

// --- ConvexHullCount --------------------------------------------------------

namespace {

long long cross(std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

bool on_segment(std::pair<int, int> p, std::pair<int, int> a, std::pair<int, int> b) {
  return cross(a, b, p) == 0 && std::min(a.first, b.first) <= p.first &&
         p.first <= std::max(a.first, b.first) && std::min(a.second, b.second) <= p.second &&
         p.second <= std::max(a.second, b.second);
}

}  // namespace

std::vector<std::pair<int, int>> ConvexHullCount::hull(std::vector<std::pair<int, int>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<std::pair<int, int>> h(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);
  return h;
}

ConvexHullCount::Instance ConvexHullCount::generate(const Json& params, Rng& rng) {
  const int count = param_int(params, "point_count");
  const int range = param_int(params, "coord_range");
  return generate_until_valid("convex_hull_count", [&]() -> std::optional<Instance> {
    std::set<std::pair<int, int>> unique;
    while (static_cast<int>(unique.size()) < count) {
      unique.emplace(static_cast<int>(rng.uniform_int(-range, range)),
                     static_cast<int>(rng.uniform_int(-range, range)));
    }
    Instance inst;
    // Random order so the caption leaks nothing about hull membership.
    inst.points.assign(unique.begin(), unique.end());
    rng.shuffle(inst.points);
    const auto h = hull(inst.points);
    if (h.size() < 3) return std::nullopt;
    for (const auto& p : inst.points) {
      if (std::find(h.begin(), h.end(), p) != h.end()) continue;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (on_segment(p, h[i], h[(i + 1) % h.size()])) return std::nullopt;
      }
    }
    return inst;
  });
}

Verdict ConvexHullCount::verify(const Instance& inst, std::string_view answer) {
  return detail::verify_integer(answer, static_cast<long long>(hull(inst.points).size()));
}

std::string ConvexHullCount::answer(const Instance& inst) {
  return std::to_string(hull(inst.points).size());
}

std::string ConvexHullCount::question(const Instance& inst) {
  return "The plot shows " + std::to_string(inst.points.size()) +
         " points on an integer grid. How many of them are vertices of their convex hull? Answer "
         "with a single integer.";
}

std::string ConvexHullCount::caption(const Instance& inst) {
  std::string out = "Points:";
  for (const auto& [x, y] : inst.points) {
    out += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return out;
}

RasterImage ConvexHullCount::render(const Instance& inst, const StyleConfig& style) {
  int range = 1;
  for (const auto& [x, y] : inst.points) range = std::max({range, std::abs(x), std::abs(y)});
  const double r = range + 1;
  return render_points(inst.points, Viewport{-r, r, -r, r}, style);
}

std::string ConvexHullCount::random_answer(const Instance& inst, Rng& rng) {
  return std::to_string(rng.uniform_int(3, static_cast<long long>(inst.points.size())));
}

}  // namespace gymv::envs
