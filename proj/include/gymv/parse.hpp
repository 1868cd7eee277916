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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gymv {

/// Answer and action syntaxes published in the catalog manifest.
enum class Grammar {
  kDirection,        // up|down|left|right
  kReveal,           // reveal r c
  kPlace,            // place r c
  kInteger,          // -?\d+
  kIntegerSequence,  // 3 1 4 (spaces, commas or arrows between)
  kPairSequence,     // (0,2) (1,2) ...
  kDigitGrid,        // n rows of n digits
  kBit,              // 0|1
};

std::string_view to_string(Grammar g);
/// Throws std::invalid_argument for an unknown grammar name.
Grammar parse_grammar(std::string_view name);

struct ParsedAction {
  Grammar grammar = Grammar::kInteger;
  /// Direction word for kDirection, empty otherwise.
  std::string word;
  /// Integers in order of appearance (pairs flattened, grid row-major).
  std::vector<long long> values;
  std::string raw;

  /// Canonical text form; parsing it again yields the same action.
  std::string canonical() const;
  std::vector<std::pair<long long, long long>> pairs() const;

  friend bool operator==(const ParsedAction&, const ParsedAction&) = default;
};

struct InvalidAction {
  std::string reason;
  std::string raw;

  friend bool operator==(const InvalidAction&, const InvalidAction&) = default;
};

using ActionParse = std::variant<ParsedAction, InvalidAction>;

/// Extracts the last grammar-conformant command from free text. Total: never
/// throws, returns InvalidAction("no match") when nothing conforms.
ActionParse parse_action(std::string_view raw, Grammar grammar);

inline const ParsedAction* as_action(const ActionParse& p) { return std::get_if<ParsedAction>(&p); }

/// Matches "TOOL: <expr>" and returns the expression.
std::optional<std::string> parse_tool_call(std::string_view raw);

}  // namespace gymv
