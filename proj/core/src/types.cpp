// Copyright 2026 The proofmine Authors
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

#include "proofmine/types.hpp"

#include <algorithm>
#include <cctype>

#include "proofmine/error.hpp"

namespace proofmine {

struct FinType::Node {
  Kind kind;
  FinType result;
  FinType argument;
  std::size_t hash;
};

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

FinType::FinType() : FinType(Zero()) {}

FinType::FinType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

FinType FinType::Zero() {
  // Leaf children are null and never read.
  static const FinType zero = [] {
    auto n = std::shared_ptr<Node>(new Node{Kind::kZero, FinType(nullptr), FinType(nullptr), 0x51});
    return FinType(n);
  }();
  return zero;
}

FinType FinType::X() {
  static const FinType x = [] {
    auto n = std::shared_ptr<Node>(new Node{Kind::kX, FinType(nullptr), FinType(nullptr), 0x58});
    return FinType(n);
  }();
  return x;
}

FinType FinType::Arrow(FinType result, FinType argument) {
  std::size_t h = Mix(Mix(0xa7, result.hash()), argument.hash());
  return FinType(std::make_shared<const Node>(Node{Kind::kArrow, std::move(result), std::move(argument), h}));
}

FinType::Kind FinType::kind() const { return node_->kind; }

const FinType& FinType::result() const { return node_->result; }
const FinType& FinType::argument() const { return node_->argument; }

const FinType& FinType::head() const {
  const FinType* t = this;
  while (t->is_arrow()) t = &t->result();
  return *t;
}

std::vector<FinType> FinType::arguments() const {
  // head(a_k)...(a_1) takes a_1 first, and a_1 is the outermost argument.
  std::vector<FinType> args;
  for (const FinType* t = this; t->is_arrow(); t = &t->result()) args.push_back(t->argument());
  return args;
}

bool FinType::in_t() const {
  switch (kind()) {
    case Kind::kZero: return true;
    case Kind::kX: return false;
    case Kind::kArrow: return result().in_t() && argument().in_t();
  }
  return false;
}

std::size_t FinType::hash() const { return node_ ? node_->hash : 0; }

std::string FinType::str() const {
  switch (kind()) {
    case Kind::kZero: return "0";
    case Kind::kX: return "X";
    case Kind::kArrow: return result().str() + "(" + argument().str() + ")";
  }
  return "?";
}

bool operator==(const FinType& a, const FinType& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.kind() != b.kind()) return false;
  if (!a.is_arrow()) return true;
  return a.result() == b.result() && a.argument() == b.argument();
}

FinType CurriedType(const FinType& head, const std::vector<FinType>& args) {
  FinType t = head;
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = FinType::Arrow(t, *it);
  return t;
}

unsigned Degree(const FinType& t) {
  switch (t.kind()) {
    case FinType::Kind::kZero: return 0;
    case FinType::Kind::kX:
      throw Error(ErrorCode::kTypeContainsX, "degree is only defined on X-free types");
    case FinType::Kind::kArrow:
      return std::max(Degree(t.result()), Degree(t.argument()) + 1);
  }
  return 0;
}

FinType PureType(unsigned n) {
  FinType t = FinType::Zero();
  for (unsigned i = 0; i < n; ++i) t = FinType::Arrow(FinType::Zero(), t);
  return t;
}

bool IsSmall(const FinType& t) {
  if (!t.is_arrow()) return true;
  for (const FinType& a : t.arguments())
    if (!a.is_zero()) return false;
  return true;
}

bool IsAdmissible(const FinType& t) {
  if (!t.is_arrow()) return true;
  for (const FinType& a : t.arguments())
    if (!IsSmall(a)) return false;
  return true;
}

TypeClassification Classify(const FinType& t) {
  TypeClassification c;
  if (t.in_t()) c.degree = Degree(t);
  c.small = IsSmall(t);
  c.admissible = IsAdmissible(t);
  return c;
}

FinType Hat(const FinType& t) {
  switch (t.kind()) {
    case FinType::Kind::kZero:
    case FinType::Kind::kX: return FinType::Zero();
    case FinType::Kind::kArrow: return FinType::Arrow(Hat(t.result()), Hat(t.argument()));
  }
  return FinType::Zero();
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  FinType ParseAll() {
    FinType t = ParseType();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters");
    return t;
  }

 private:
  FinType ParseType() {
    FinType t = ParseAtom();
    SkipSpace();
    while (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      FinType arg = ParseType();
      SkipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') Fail("expected ')'");
      ++pos_;
      t = FinType::Arrow(t, arg);
      SkipSpace();
    }
    return t;
  }

  FinType ParseAtom() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of type");
    char c = text_[pos_];
    if (c == 'X') {
      ++pos_;
      return FinType::X();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (n > 64) Fail("pure type index too large");
        ++pos_;
      }
      return PureType(n);
    }
    Fail(std::string("unexpected character '") + c + "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "type '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FinType ParseType(std::string_view text) { return TypeParser(text).ParseAll(); }

}  // namespace proofmine
