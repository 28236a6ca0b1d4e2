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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "proofmine/algorithms.hpp"
#include "proofmine/error.hpp"

using namespace proofmine;

namespace {

Vec Scalar(double x) { return Vec::Constant(1, x); }

}  // namespace

TEST_CASE("parameter sequences") {
  const ParamSequence c = ParamSequence::Parse("const:2");
  CHECK(c.at(0) == 2.0);
  CHECK(c.at(99) == 2.0);
  CHECK(c.modulus(0) == 0);
  const ParamSequence h = ParamSequence::Parse("harmonic:1");
  CHECK(h.at(3) == 0.25);
  CHECK(h.modulus(3) == 3);
  const ParamSequence g = ParamSequence::Parse("geometric:4:0.5");
  CHECK(g.at(2) == 1.0);
  CHECK(g.modulus(2) == 1);
  for (std::size_t n = 0; n < 40; ++n) {
    const unsigned a = h.modulus(n);
    CHECK(h.at(n) > std::ldexp(1.0, -int(a)));
    if (a) CHECK_FALSE(h.at(n) > std::ldexp(1.0, -int(a) + 1));
  }
  CHECK(ParamSequence::Parse(g.str()).at(5) == g.at(5));
  CHECK_THROWS_AS(ParamSequence::Parse("const"), Error);
  CHECK_THROWS_AS(ParamSequence::Parse("linear:2"), Error);
  CHECK_THROWS_AS(ParamSequence::Parse("const:-1"), Error);
  CHECK_THROWS_AS(ParamSequence::Parse("const:abc"), Error);
}

TEST_CASE("proximal point on the identity halves the iterate") {
  const auto id = MakeInstance("identity");
  Vec x0(2);
  x0 << 8, 0;
  const IterationTrace t = ProximalPoint(*id, x0, ParamSequence::Parse("const:1"), 10);
  REQUIRE(t.steps.size() == 10);
  for (std::size_t n = 0; n < 10; ++n) CHECK(t.steps[n].x[0] == doctest::Approx(8 * std::ldexp(1.0, -int(n))));
  CHECK(t.final_point[0] == doctest::Approx(8.0 / 1024));
  const TraceSummary s = SummarizeTrace(t);
  REQUIRE(s.residual_ratio.has_value());
  CHECK(*s.residual_ratio == doctest::Approx(0.5));
}

TEST_CASE("proximal point on the absolute value") {
  const auto abs = MakeInstance("abs_subdiff");
  const IterationTrace t = ProximalPoint(*abs, Scalar(3.5), ParamSequence::Parse("const:1"), 8, Scalar(0));
  const std::vector<double> expected{3.5, 2.5, 1.5, 0.5, 0, 0, 0, 0};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(t.steps[n].x[0] == expected[n]);
  REQUIRE(ZeroReachedAt(*abs, t).has_value());
  CHECK(*ZeroReachedAt(*abs, t) == 4);
  const TraceSummary s = SummarizeTrace(t);
  CHECK(s.fejer == true);
  CHECK(s.worst_membership_defect == 0.0);
  CHECK(s.status == "ok");

  const IterationTrace still = ProximalPoint(*abs, Scalar(0), ParamSequence::Parse("const:1"), 5);
  for (const auto& st : still.steps) CHECK(st.x[0] == 0.0);
  CHECK(*ZeroReachedAt(*abs, still) == 0);
}

TEST_CASE("Fejer monotonicity on monotone instances") {
  for (const char* name : {"identity", "psd_skew", "abs_subdiff", "box_normal_cone", "two_identity"}) {
    const auto a = MakeInstance(name);
    const Vec zero = *a->known_zero();
    Vec x0 = Vec::Constant(a->dimension(), 0.9);
    for (const char* gamma : {"const:1", "harmonic:2", "geometric:3:0.9"}) {
      CAPTURE(name);
      CAPTURE(gamma);
      const IterationTrace t = ProximalPoint(*a, x0, ParamSequence::Parse(gamma), 200, zero);
      const TraceSummary s = SummarizeTrace(t);
      CHECK(s.fejer == true);
      CHECK(s.worst_membership_defect < 1e-9);
    }
  }
}

TEST_CASE("Moudafi iteration") {
  const auto zero = MakeInstance("zero");
  const auto mu = ParamSequence::Parse("const:1");
  const auto box = MakeInstance("box_normal_cone");
  Vec x0(2);
  x0 << 4, -2;
  Vec inside(2);
  inside << 0.5, -1;
  for (const auto& [s, start] : {std::pair{box, inside}, std::pair{MakeInstance("two_identity"), x0}}) {
    const IterationTrace m = MoudafiIteration(*zero, *s, start, mu, mu, 10);
    const IterationTrace p = ProximalPoint(*s, start, mu, 10);
    for (std::size_t n = 0; n < 10; ++n) CHECK(m.steps[n].x == p.steps[n].x);
  }

  const auto id = MakeInstance("identity");
  const IterationTrace q = MoudafiIteration(*id, *id, x0, mu, mu, 6);
  for (std::size_t n = 1; n < 6; ++n) CHECK((q.steps[n].x - 0.75 * q.steps[n - 1].x).norm() < 1e-12);
}

TEST_CASE("abnormal termination") {
  const auto neg = MakeInstance("neg_half_identity");
  const auto zero = MakeInstance("zero");
  Vec x0(2);
  x0 << 1, 1;
  const IterationTrace d =
      MoudafiIteration(*neg, *zero, x0, ParamSequence::Parse("const:6"), ParamSequence::Parse("const:8"), 100);
  CHECK(d.status == "diverged");
  CHECK(d.steps.size() < 100);

  const auto tan = MakeInstance("tan_subgradient");
  const IterationTrace o = ProximalPoint(*tan, Scalar(1.2), ParamSequence::Parse("const:1"), 10);
  CHECK(o.status == "outside_domain");
  CHECK_FALSE(o.message.empty());
  CHECK_THROWS_AS(ProximalPoint(*tan, Scalar(-1), ParamSequence::Parse("const:1"), 10), Error);
}

TEST_CASE("trace serialization") {
  const auto skew = MakeInstance("psd_skew");
  const Vec x0 = Vec::Constant(skew->dimension(), 1.0);
  const IterationTrace t = ProximalPoint(*skew, x0, ParamSequence::Parse("harmonic:2"), 25, *skew->known_zero());
  const IterationTrace back = TraceFromJson(TraceToJson(t));
  REQUIRE(back.steps.size() == t.steps.size());
  CHECK(back.final_point == t.final_point);
  for (std::size_t n = 0; n < t.steps.size(); ++n) {
    CHECK(back.steps[n].x == t.steps[n].x);
    CHECK(back.steps[n].residual == t.steps[n].residual);
    CHECK(back.steps[n].distance == t.steps[n].distance);
  }
  CHECK(SummarizeTrace(back) == SummarizeTrace(t));
  const TraceSummary s = SummarizeTrace(t);
  CHECK(SummaryFromJson(SummaryToJson(s)) == s);
  CHECK(TraceToJson(back).dump() == TraceToJson(t).dump());

  const std::string csv = TraceToCsv(t);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("n,gamma,lambda,residual,yosida_norm,membership_defect,distance,x0", 0) == 0);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 25);
}
