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
#include "gymv/parse.hpp"

#include <array>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace gymv {

namespace {

constexpr std::array<std::string_view, 8> kGrammarNames = {
    "direction", "reveal", "place", "integer", "integer_sequence", "pair_sequence", "digit_grid",
    "bit"};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

/// Last match of `re` in `text`, if any.
std::optional<std::smatch> last_match(const std::string& text, const std::regex& re) {
  std::optional<std::smatch> last;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator();
       ++it) {
    last = *it;
  }
  return last;
}

std::vector<long long> integers_in(const std::string& text) {
  static const std::regex kInt(R"(-?\d+)");
  std::vector<long long> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kInt); it != std::sregex_iterator();
       ++it) {
    try {
      out.push_back(std::stoll(it->str()));
    } catch (const std::out_of_range&) {
      return {};
    }
  }
  return out;
}

std::vector<long long> digits_in(const std::string& text) {
  std::vector<long long> out;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) out.push_back(c - '0');
  }
  return out;
}

}  // namespace

std::string_view to_string(Grammar g) { return kGrammarNames[static_cast<std::size_t>(g)]; }

Grammar parse_grammar(std::string_view name) {
  for (std::size_t i = 0; i < kGrammarNames.size(); ++i) {
    if (kGrammarNames[i] == name) return static_cast<Grammar>(i);
  }
  throw std::invalid_argument("unknown grammar '" + std::string(name) + "'");
}

std::vector<std::pair<long long, long long>> ParsedAction::pairs() const {
  std::vector<std::pair<long long, long long>> out;
  for (std::size_t i = 0; i + 1 < values.size(); i += 2) out.emplace_back(values[i], values[i + 1]);
  return out;
}

std::string ParsedAction::canonical() const {
  auto join = [&](std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(values[i]);
    }
    return out;
  };
  switch (grammar) {
    case Grammar::kDirection:
      return word;
    case Grammar::kReveal:
      return "reveal " + join(" ");
    case Grammar::kPlace:
      return "place " + join(" ");
    case Grammar::kInteger:
    case Grammar::kBit:
    case Grammar::kIntegerSequence:
      return join(" ");
    case Grammar::kPairSequence: {
      std::string out;
      for (const auto& [a, b] : pairs()) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      return out;
    }
    case Grammar::kDigitGrid: {
      std::size_t side = 0;
      while ((side + 1) * (side + 1) <= values.size()) ++side;
      std::string out;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i && side && i % side == 0) out += '\n';
        out += std::to_string(values[i]);
      }
      return out;
    }
  }
  return {};
}

ActionParse parse_action(std::string_view raw_view, Grammar grammar) {
  const std::string raw(raw_view);
  const std::string text = lower(raw);
  ParsedAction action;
  action.grammar = grammar;
  action.raw = raw;
  auto invalid = [&](std::string reason) { return InvalidAction{std::move(reason), raw}; };

  switch (grammar) {
    case Grammar::kDirection: {
      static const std::regex re(R"(\b(up|down|left|right)\b)");
      auto m = last_match(text, re);
      if (!m) return invalid("no match");
      action.word = (*m)[1].str();
      return action;
    }
    case Grammar::kReveal:
    case Grammar::kPlace: {
      static const std::regex reveal(R"(\breveal\s*\(?\s*(\d+)\s*[, ]\s*(\d+)\s*\)?)");
      static const std::regex place(R"(\bplace\s*\(?\s*(\d+)\s*[, ]\s*(\d+)\s*\)?)");
      auto m = last_match(text, grammar == Grammar::kReveal ? reveal : place);
      if (!m) return invalid("no match");
      try {
        action.values = {std::stoll((*m)[1].str()), std::stoll((*m)[2].str())};
      } catch (const std::out_of_range&) {
        return invalid("coordinate out of range");
      }
      return action;
    }
    case Grammar::kInteger: {
      static const std::regex re(R"((^|[^\w.])(-?\d+)(?![\w.]*\d))");
      auto m = last_match(text, re);
      if (!m) return invalid("no match");
      try {
        action.values = {std::stoll((*m)[2].str())};
      } catch (const std::out_of_range&) {
        return invalid("integer out of range");
      }
      return action;
    }
    case Grammar::kBit: {
      static const std::regex re(R"((^|[^\w])([01])(?!\w))");
      auto m = last_match(text, re);
      if (!m) return invalid("no match");
      action.values = {(*m)[2].str() == "1" ? 1 : 0};
      return action;
    }
    case Grammar::kIntegerSequence: {
      static const std::regex re(R"(\d+(?:(?:\s*(?:,|->|-)\s*|\s+)\d+)*)");
      auto m = last_match(text, re);
      if (!m) return invalid("no match");
      action.values = integers_in(std::regex_replace(m->str(), std::regex("-"), " "));
      if (action.values.empty()) return invalid("integer out of range");
      return action;
    }
    case Grammar::kPairSequence: {
      static const std::regex re(
          R"(\(\s*\d+\s*,\s*\d+\s*\)(?:[\s,;]*(?:->)?[\s,;]*\(\s*\d+\s*,\s*\d+\s*\))*)");
      auto m = last_match(text, re);
      if (!m) return invalid("no match");
      action.values = integers_in(m->str());
      if (action.values.empty() || action.values.size() % 2 != 0) return invalid("malformed pairs");
      return action;
    }
    case Grammar::kDigitGrid: {
      // Rows of digits separated by newlines, '/' or ';' (spaces, commas or
      // bars allowed within a row), or one contiguous run of digits.
      static const std::regex re(
          R"(\d(?:[ \t,|]*\d)*(?:[ \t]*(?:\r?\n|/|;)[ \t]*\d(?:[ \t,|]*\d)*)+|\d{4,})");
      auto m = last_match(text, re);
      if (!m) return invalid("no match");
      action.values = digits_in(m->str());
      return action;
    }
  }
  return invalid("unsupported grammar");
}

std::optional<std::string> parse_tool_call(std::string_view raw) {
  static const std::regex re(R"(^\s*TOOL:\s*(.*?)\s*$)");
  std::string text(raw);
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  return m[1].str();
}

}  // namespace gymv
