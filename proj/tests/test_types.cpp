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

#include <functional>
#include <vector>

#include "doctest.h"
#include "proofmine/error.hpp"
#include "proofmine/types.hpp"

using namespace proofmine;

namespace {

/// Every type with exactly `leaves` base occurrences.
std::vector<FinType> TypesWithLeaves(int leaves) {
  if (leaves == 1) return {FinType::Zero(), FinType::X()};
  std::vector<FinType> out;
  for (int left = 1; left < leaves; ++left)
    for (const auto& r : TypesWithLeaves(left))
      for (const auto& a : TypesWithLeaves(leaves - left)) out.push_back(FinType::Arrow(r, a));
  return out;
}

std::size_t Arity(const FinType& t) { return t.arguments().size(); }

}  // namespace

TEST_CASE("degree follows deg(t(r)) = max(deg t, deg r + 1)") {
  CHECK(Degree(ParseType("0")) == 0);
  CHECK(Degree(ParseType("0(0)")) == 1);
  CHECK(Degree(ParseType("0(0(0))")) == 2);
  CHECK(Degree(ParseType("0(0)(0)")) == 1);
  CHECK_THROWS_AS(Degree(ParseType("X(X)")), Error);
}

TEST_CASE("pure types") {
  CHECK(PureType(0) == FinType::Zero());
  CHECK(PureType(1) == ParseType("0(0)"));
  CHECK(PureType(2) == ParseType("0(0(0))"));
  CHECK(ParseType("2") == PureType(2));
  for (unsigned n = 0; n <= 10; ++n) CHECK(Classify(PureType(n)).degree == n);
}

TEST_CASE("small and admissible") {
  CHECK(IsSmall(FinType::X()));
  CHECK(IsAdmissible(FinType::X()));
  CHECK(IsAdmissible(ParseType("X(X)")));
  CHECK_FALSE(IsSmall(ParseType("X(X)")));
  CHECK_FALSE(IsAdmissible(ParseType("0(X(X))")));
  CHECK(IsSmall(ParseType("X(0)(0)")));
  CHECK(IsAdmissible(ParseType("X(X)(1)")));
  CHECK_FALSE(Classify(ParseType("X(X)")).degree.has_value());
}

TEST_CASE("hat") {
  CHECK(Hat(FinType::X()) == FinType::Zero());
  CHECK(Hat(ParseType("X(X)")) == ParseType("0(0)"));
  CHECK(Hat(ParseType("X(X)(1)")) == ParseType("0(0)(0(0))"));
}

TEST_CASE("arguments are listed in application order") {
  const FinType j = ParseType("X(X)(1)");
  REQUIRE(j.arguments().size() == 2);
  CHECK(j.arguments()[0] == PureType(1));
  CHECK(j.arguments()[1] == FinType::X());
  CHECK(j.head() == FinType::X());
  CHECK(CurriedType(j.head(), j.arguments()) == j);
}

TEST_CASE("parser round trip and errors") {
  for (const char* text : {"0", "X", "0(0)", "X(X)(0(0))", "0(0(0))(X)"}) CHECK(ParseType(text).str() == text);
  CHECK_THROWS_AS(ParseType("0("), Error);
  CHECK_THROWS_AS(ParseType("Y"), Error);
  CHECK_THROWS_AS(ParseType(""), Error);
}

TEST_CASE("exhaustive properties up to 8 leaves") {
  std::size_t count = 0;
  for (int leaves = 1; leaves <= 8; ++leaves) {
    for (const FinType& t : TypesWithLeaves(leaves)) {
      ++count;
      if (IsSmall(t)) CHECK(IsAdmissible(t));
      const FinType h = Hat(t);
      CHECK(h.in_t());
      CHECK(Hat(h) == h);
      CHECK(Arity(h) == Arity(t));
      if (t.in_t()) CHECK(h == t);
      CHECK(ParseType(t.str()) == t);
      CHECK(std::hash<FinType>{}(ParseType(t.str())) == std::hash<FinType>{}(t));
    }
  }
  CHECK(count > 100000);
}
