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
#include "gymv/tools.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "gymv/types.hpp"

namespace gymv {

namespace {

// Recursive descent; ^ binds tighter than unary minus and is right-assoc.
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  double parse() {
    const double v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ToolError(why); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double sum() {
    double v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const double d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (eat('%')) {
        const double d = unary();
        if (d == 0) fail("division by zero");
        v = std::fmod(v, d);
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  double power() {
    const double base = atom();
    if (eat('^')) {
      const double e = unary();
      const double v = std::pow(base, e);
      if (!std::isfinite(v)) fail("result not finite");
      return v;
    }
    return base;
  }

  double atom() {
    if (++depth_ > 64) fail("expression nested too deeply");
    double v = 0;
    if (eat('(')) {
      v = sum();
      if (!eat(')')) fail("missing ')'");
    } else {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (start == pos_) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
      const std::string num(s_.substr(start, pos_ - start));
      char* end = nullptr;
      v = std::strtod(num.c_str(), &end);
      if (end != num.c_str() + num.size()) fail("bad number '" + num + "'");
    }
    --depth_;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

double evaluate_arithmetic(std::string_view expr) { return Parser(expr).parse(); }

std::string ArithmeticTool::call(std::string_view input) const {
  double v = evaluate_arithmetic(input);
  if (!std::isfinite(v)) throw ToolError("result not finite");
  if (v == 0) v = 0;  // no "-0"
  return format_number(v);
}

std::unique_ptr<Tool> make_tool(std::string_view name) {
  if (name == "arithmetic") return std::make_unique<ArithmeticTool>();
  throw ToolError("unknown tool '" + std::string(name) + "'");
}

}  // namespace gymv
