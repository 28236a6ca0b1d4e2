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
#include <optional>
#include <random>

#include "doctest.h"
#include "proofmine/error.hpp"
#include "proofmine/operator_checks.hpp"
#include "proofmine/operators.hpp"

using namespace proofmine;

namespace {

Vec V(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

double SoftThreshold(double x, double g) { return x > g ? x - g : (x < -g ? x + g : 0.0); }

VerifyOptions Opts(std::size_t samples = 300) {
  VerifyOptions o;
  o.samples = samples;
  return o;
}

/// Rotation by 90 degrees: monotone, 1-Lipschitz, resolvent only by iteration.
class Rotation final : public SetValuedOperator {
 public:
  std::string name() const override { return "rotation"; }
  int dimension() const override { return 2; }
  BoxSet Values(const Vec& x) const override { return BoxSet::Point(V({x[1], -x[0]})); }
  std::optional<double> LipschitzConstant() const override { return 1.0; }
};

class CoLipschitz final : public SetValuedOperator {
 public:
  std::string name() const override { return "co_lipschitz"; }
  int dimension() const override { return 1; }
  ClassSpec declared_class() const override { return {OperatorClass::kComonotone, -0.25, NormKind::kL2}; }
  BoxSet Values(const Vec& x) const override { return BoxSet::Point(-0.25 * x); }
  std::optional<double> LipschitzConstant() const override { return 1.0; }
};

}  // namespace

TEST_CASE("iterative resolvent") {
  const Rotation r;
  for (double g : {0.5, 2.0}) {
    // (I + g M)^-1 = [[1, -g], [g, 1]] / (1 + g^2)
    const Vec x = V({3, -1});
    const Vec expected = V({x[0] - g * x[1], g * x[0] + x[1]}) / (1 + g * g);
    CHECK((Resolvent(r, g, x) - expected).norm() < 1e-9);
  }
}

TEST_CASE("closed-form resolvents") {
  const auto id = MakeInstance("identity");
  CHECK((Resolvent(*id, 1.0, V({2, 2})) - V({1, 1})).norm() < 1e-14);
  const auto abs = MakeInstance("abs_subdiff");
  CHECK(Resolvent(*abs, 1.0, V({2}))[0] == doctest::Approx(1.0));
  for (double g : {0.25, 1.0, 3.0})
    for (double x = -5; x <= 5; x += 0.37) CHECK(Resolvent(*abs, g, V({x}))[0] == doctest::Approx(SoftThreshold(x, g)));
  const auto neg = MakeInstance("neg_half_identity");
  CHECK((Resolvent(*neg, 8.0, V({3, 0})) - V({-1, 0})).norm() < 1e-14);
  const auto box = MakeInstance("box_normal_cone");
  CHECK((Resolvent(*box, 2.0, V({3, -0.5})) - V({1, -0.5})).norm() < 1e-14);
}

TEST_CASE("resolvent errors and guards") {
  const auto neg = MakeInstance("neg_half_identity");
  CHECK_THROWS_AS(Resolvent(*neg, 0.0, V({1, 1})), Error);
  try {
    Resolvent(*neg, 4.0, V({1, 1}));
    FAIL("rho = -gamma/2 must be refused");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPartialResolventGuard);
  }
  CHECK_FALSE(ResolventAvailable(*neg, 1.0));
  CHECK(ResolventAvailable(*neg, 8.0));
  const auto tan = MakeInstance("tan_subgradient");
  try {
    Resolvent(*tan, 1.0, V({0.5}));
    FAIL("x <= gamma lies outside the range of I + gamma A");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOutsideDomain);
  }
  const double p = Resolvent(*tan, 0.5, V({3.0}))[0];
  CHECK(p + 0.5 / (std::cos(p) * std::cos(p)) == doctest::Approx(3.0).epsilon(1e-9));
  const auto atan = MakeInstance("arctan");
  for (double g : {0.5, 2.0, 64.0}) {
    const double q = Resolvent(*atan, g, V({1.0}))[0];
    CHECK(q + g * std::atan(q) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(Resolvent(CoLipschitz(), 1.0, V({1.0})), Error);
  CHECK_THROWS_AS(MakeInstance("no_such_operator"), Error);
}

TEST_CASE("Yosida approximate") {
  const auto abs = MakeInstance("abs_subdiff");
  CHECK(Yosida(*abs, 1.0, V({0.5}))[0] == doctest::Approx(0.5));
  CHECK(Yosida(*abs, 1.0, V({0.5})).norm() <= 1.0);
  const auto id = MakeInstance("identity");
  CHECK((Yosida(*id, 1.0, V({4, -2})) - V({2, -1})).norm() < 1e-14);
}

TEST_CASE("class checks") {
  const auto skew = MakeInstance("psd_skew", 3);
  const CheckResult mono = CheckOperatorClass(*skew, {OperatorClass::kMonotone, 0, NormKind::kL2}, Opts());
  CHECK(mono.passed());
  CHECK(mono.worst_slack >= -1e-12);
  const auto abs = MakeInstance("abs_subdiff");
  CHECK(CheckOperatorClass(*abs, {OperatorClass::kMonotone, 0, NormKind::kL2}, Opts()).passed());
  CHECK(CheckOperatorClass(*abs, {OperatorClass::kAccretive, 0, NormKind::kL2}, Opts()).passed());
  const auto neg = MakeInstance("neg_half_identity");
  CHECK(CheckOperatorClass(*neg, {OperatorClass::kComonotone, -2.0, NormKind::kL2}, Opts()).passed());
  CHECK_FALSE(CheckOperatorClass(*neg, {OperatorClass::kComonotone, -1.9, NormKind::kL2}, Opts()).passed());
  CHECK_FALSE(CheckOperatorClass(*neg, {OperatorClass::kMonotone, 0, NormKind::kL2}, Opts()).passed());
}

TEST_CASE("monotone instances are accretive in l2") {
  for (const char* name : {"identity", "psd_skew", "abs_subdiff", "box_normal_cone", "zero", "arctan"}) {
    const auto a = MakeInstance(name);
    CHECK(CheckOperatorClass(*a, {OperatorClass::kAccretive, 0, NormKind::kL2}, Opts()).passed());
  }
}

TEST_CASE("averagedness constant") {
  CHECK(ConicalAlpha(0.0, 1.0) == 0.5);
  CHECK(ConicalAlpha(-2.0, 8.0) == doctest::Approx(2.0 / 3.0));
  CHECK(EffectiveGammaGrid(*MakeInstance("neg_half_identity"), {0.25, 0.5, 1, 2, 4}) == std::vector<double>{8.0});
  CHECK(EffectiveGammaGrid(*MakeInstance("identity"), {0.5, 2}) == std::vector<double>{0.5, 2});
}

TEST_CASE("resolvent property suite") {
  for (const char* name : {"identity", "abs_subdiff", "box_normal_cone", "neg_half_identity"}) {
    const CheckReport r = CheckResolventProperties(*MakeInstance(name), Opts());
    CAPTURE(name);
    CHECK(r.passed());
    CHECK(r.WorstSlack() >= -1e-8);
  }
  const CheckReport neg = CheckResolventProperties(*MakeInstance("neg_half_identity"), Opts());
  CHECK(neg.Find("firm_ne_inner")->evaluated == 0);
  CHECK(neg.Find("alpha_conical")->evaluated > 0);
}

TEST_CASE("resolvent identity on the soft threshold") {
  // J_2(3) = 1 and J_1((1/2) 3 + (1/2) J_2(3)) = J_1(2) = 1.
  const auto abs = MakeInstance("abs_subdiff");
  const double j2 = Resolvent(*abs, 2.0, V({3}))[0];
  CHECK(j2 == 1.0);
  CHECK(Resolvent(*abs, 1.0, V({0.5 * 3 + 0.5 * j2}))[0] == doctest::Approx(j2));
}

TEST_CASE("parameter modulus") {
  CHECK(ResolventParamModulus(1, 0, 3) == 3);
  CHECK(ResolventParamModulus(1, 0, 0) == 0);
  CHECK(ResolventParamModulus(4, 2, 5) == 9);
  CHECK(ResolventParamModulus(3, 1, 2) == 4);
  CHECK(ResolventParamModulus(0.5, 0, 3) == 3);
  const auto abs = MakeInstance("abs_subdiff");
  for (double g = 1 - 0.125; g <= 1 + 0.125; g += 1.0 / 64)
    CHECK(std::abs(Resolvent(*abs, g, V({2}))[0] - 1.0) <= 0.125 + 1e-15);
  const auto two = MakeInstance("two_identity");
  CHECK(VerifyResolventParamModulus(*two, 4, 2, 5, Opts()).passed());
}

TEST_CASE("minimal norm selection") {
  const auto abs = MakeInstance("abs_subdiff");
  CHECK(MinimalNormSelection(*abs, V({0}))[0] == 0.0);
  CHECK(MinimalNormSelection(*abs, V({-2}))[0] == -1.0);
  const auto id = MakeInstance("identity");
  CHECK((MinimalNormSelection(*id, V({1, 2})) - V({1, 2})).norm() == 0.0);
  const auto box = MakeInstance("box_normal_cone");
  CHECK(MinimalNormSelection(*box, V({1, -1})).norm() == 0.0);
  CHECK_THROWS_AS(MinimalNormSelection(*box, V({2, 0})), Error);
  for (const char* name : {"abs_subdiff", "box_normal_cone", "psd_skew", "tan_subgradient"})
    CHECK(CheckMinimalNorm(*MakeInstance(name), Opts()).passed());
}

TEST_CASE("Hausdorff-like predicate and uniform continuity") {
  const std::vector<Vec> p{V({0, 0}), V({1, 1})};
  CHECK(HStar(p, p, 0.0));
  CHECK_FALSE(HStar({V({0})}, {V({1})}, 0.5));
  CHECK(HStar({V({0})}, {V({1}), V({0.4})}, 0.5));
  CHECK(HStar(BoxSet::Point(V({0.5})), BoxSet::Box(V({-1}), V({1})), 0.0));
  CHECK_FALSE(HStar(BoxSet::Box(V({-1}), V({1})), BoxSet::Point(V({0})), 0.5));
  CHECK(HStarExcess(BoxSet::Box(V({-1}), V({1})), BoxSet::Point(V({0}))) == doctest::Approx(1.0));
  const auto two = MakeInstance("two_identity");
  const std::vector<Nat> ks{0, 1, 2, 5, 10};
  CHECK(UcModulusCheck(*two, [](Nat k) { return 2 * (k + 1); }, ks, Opts()).passed());
  CHECK_FALSE(UcModulusCheck(*two, [](Nat k) { return k; }, ks, Opts()).passed());
}

TEST_CASE("range condition") {
  const auto abs = MakeInstance("abs_subdiff");
  const CheckReport r = RangeConditionCheck(*abs, {1.0, 0.5, 2.0}, {1, 2, 0}, 5.0, V({0}), Opts());
  CHECK(r.passed());
  CHECK(r.Find("w_bound")->evaluated > 0);
  const auto skew = MakeInstance("psd_skew", 1);
  CHECK(RangeConditionCheck(*skew, {1.0}, {1}, 3.0, Vec::Zero(skew->dimension()), Opts()).passed());
  CHECK_THROWS_AS(RangeConditionCheck(*abs, {0.5}, {1}, 5.0, V({0}), Opts()), Error);
}

TEST_CASE("clamp tilde") {
  CHECK((ClampTilde(V({3, 4}), 10) - V({3, 4})).norm() == 0.0);
  CHECK((ClampTilde(V({3, 4}), 1) - V({0.6, 0.8})).norm() < 1e-15);
  CHECK(ClampTilde(V({0, 0}), 2).norm() == 0.0);
}

TEST_CASE("graph closedness probe") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (const char* name : {"abs_subdiff", "box_normal_cone"}) {
    const auto a = MakeInstance(name);
    std::vector<Vec> bases = a->ProbePoints(2.0);
    for (int i = 0; i < 20; ++i) bases.push_back(a->SampleDomain(rng, 2.0));
    for (const Vec& x : bases) {
      if (!a->InDomain(x)) continue;
      Vec d(x.size());
      for (Eigen::Index c = 0; c < d.size(); ++c) d[c] = g(rng);
      std::optional<Vec> last, prev;
      for (int k = 10; k <= 40; ++k) {
        const Vec xk = x + std::ldexp(1.0, -k) * d;
        if (!a->InDomain(xk)) continue;
        prev = last;
        last = a->MinimalNorm(xk);
      }
      if (last && prev && (*last - *prev).norm() < 1e-12) CHECK(a->Values(x).Distance(*last) < 1e-8);
    }
  }
}

TEST_CASE("full instance verification") {
  for (const auto& name : CatalogNames()) {
    CAPTURE(name);
    CHECK(VerifyInstance(*MakeInstance(name), Opts(200)).passed());
  }
}

TEST_CASE("parallel verification is schedule independent") {
  VerifyOptions one = Opts(500), four = Opts(500);
  four.jobs = 4;
  const auto a = MakeInstance("psd_skew", 5);
  const CheckReport r1 = CheckResolventProperties(*a, one);
  const CheckReport r4 = CheckResolventProperties(*a, four);
  REQUIRE(r1.checks.size() == r4.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].worst_slack == r4.checks[i].worst_slack);
    CHECK(r1.checks[i].worst_index == r4.checks[i].worst_index);
    CHECK(r1.checks[i].evaluated == r4.checks[i].evaluated);
  }
}
