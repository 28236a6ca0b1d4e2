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

#ifndef PROOFMINE_TYPES_HPP_
#define PROOFMINE_TYPES_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proofmine {

/// A finite type over the base types 0 (naturals) and X (the abstract
/// space). Arrow(result, argument) is written result(argument), i.e. the
/// type of functions taking an argument and returning a result.
///
/// FinType is an immutable value: copies share structure, equality and
/// hashing are structural.
class FinType {
 public:
  enum class Kind { kZero, kX, kArrow };

  /// Defaults to the base type 0.
  FinType();

  static FinType Zero();
  static FinType X();
  static FinType Arrow(FinType result, FinType argument);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::kZero; }
  bool is_x() const { return kind() == Kind::kX; }
  bool is_arrow() const { return kind() == Kind::kArrow; }

  /// Only valid on arrows.
  const FinType& result() const;
  const FinType& argument() const;

  /// Peels arrows: t = head(args[k-1])...(args[0]) where args[0] is the
  /// outermost (first supplied) argument.
  const FinType& head() const;
  std::vector<FinType> arguments() const;

  /// True iff the type mentions no X, i.e. it is in T.
  bool in_t() const;

  std::size_t hash() const;
  std::string str() const;

  friend bool operator==(const FinType& a, const FinType& b);
  friend bool operator!=(const FinType& a, const FinType& b) { return !(a == b); }

 private:
  struct Node;
  explicit FinType(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Builds head(args[k-1])...(args[0]): a function first taking args[0].
FinType CurriedType(const FinType& head, const std::vector<FinType>& args);

/// deg(0)=0, deg(t(s))=max(deg t, deg s + 1). Throws TypeContainsX on
/// types outside T.
unsigned Degree(const FinType& t);

/// Pure types: 0 and n+1 = 0(n).
FinType PureType(unsigned n);

struct TypeClassification {
  std::optional<unsigned> degree;  // empty when the type mentions X
  bool small = false;
  bool admissible = false;
};

/// small: head in {0,X} with all arguments 0. admissible: head in {0,X}
/// with all arguments small.
bool IsSmall(const FinType& t);
bool IsAdmissible(const FinType& t);
TypeClassification Classify(const FinType& t);

/// Majorant-type projection: X and 0 map to 0, arrows homomorphically.
FinType Hat(const FinType& t);

/// Parses `0`, `X`, naturals n (pure types) and left-nested applications
/// such as `X(X)(1)`. Throws Error(kParseError).
FinType ParseType(std::string_view text);

/// Type-1 shorthand, 0(0).
inline FinType TypeOne() { return PureType(1); }

}  // namespace proofmine

template <>
struct std::hash<proofmine::FinType> {
  std::size_t operator()(const proofmine::FinType& t) const noexcept { return t.hash(); }
};

#endif  // PROOFMINE_TYPES_HPP_
