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

// Tools callable through "TOOL: <expr>" actions.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gymv {

class ToolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Tool {
 public:
  virtual ~Tool() = default;
  virtual std::string name() const = 0;
  /// Result text; throws ToolError on bad input.
  virtual std::string call(std::string_view input) const = 0;
};

/// Evaluates + - * / % ^ with parentheses and unary minus over decimals.
double evaluate_arithmetic(std::string_view expr);

class ArithmeticTool final : public Tool {
 public:
  std::string name() const override { return "arithmetic"; }
  std::string call(std::string_view input) const override;
};

/// Throws ToolError for an unknown tool name.
std::unique_ptr<Tool> make_tool(std::string_view name);

}  // namespace gymv
