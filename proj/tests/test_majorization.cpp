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
#include <vector>

#include "doctest.h"
#include "proofmine/error.hpp"
#include "proofmine/majorization.hpp"

using namespace proofmine;

namespace {

Value NatFn(std::function<Nat(Nat)> f) {
  return Value::OfFn([f](const Value& v) { return Value::OfNat(f(v.nat())); });
}

VerifyOptions Opts(std::size_t samples = 300) {
  VerifyOptions o;
  o.samples = samples;
  return o;
}

}  // namespace

TEST_CASE("majorization at base types") {
  const MajorizationSampler sampler(2);
  Vec p(2);
  p << 3, 4;
  CHECK(CheckMajorizes(Value::OfNat(5), Value::OfPoint(p), FinType::X(), sampler, 1, 0).holds);
  CHECK_FALSE(CheckMajorizes(Value::OfNat(4), Value::OfPoint(p), FinType::X(), sampler, 1, 0).holds);
  CHECK(CheckMajorizes(Value::OfNat(4), Value::OfNat(4), FinType::Zero(), sampler, 1, 0).holds);
  CHECK(CheckMajorizes(Value::OfNat(4), Value::OfNat(5), FinType::Zero(), sampler, 1, 0).worst_margin == -1.0);
}

TEST_CASE("majorization at type 1") {
  const MajorizationSampler sampler(1);
  const FinType one = PureType(1);
  CHECK(CheckMajorizes(NatFn([](Nat n) { return n; }), NatFn([](Nat n) { return n / 2; }), one, sampler, 200, 1)
            .holds);
  const MajorizationResult bad =
      CheckMajorizes(NatFn([](Nat) { return 0; }), NatFn([](Nat n) { return n; }), one, sampler, 200, 1);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.counterexample.empty());
  // Majorants must be monotone even when they dominate pointwise.
  CHECK_FALSE(CheckMajorizes(NatFn([](Nat n) { return n % 2 ? 0 : 100; }), NatFn([](Nat) { return 0; }), one,
                             sampler, 200, 1)
                  .holds);
}

TEST_CASE("monotone hull") {
  const std::vector<Nat> x{5, 0, 7, 1};
  const auto hull = MonotoneHull([&](Nat i) { return i < x.size() ? x[i] : 0; }, 3);
  CHECK(std::vector<Nat>{hull(0), hull(1), hull(2), hull(3)} == std::vector<Nat>{5, 5, 7, 7});
  CHECK(hull(100) == 7);
  // The hull majorizes the function and is the least monotone such bound.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Nat> t(64);
    for (auto& v : t) v = rng() % 1000;
    const auto h = MonotoneHull([&](Nat i) { return t[i]; }, 63);
    for (Nat i = 0; i < 64; ++i) {
      CHECK(h(i) >= t[i]);
      if (i) CHECK(h(i) >= h(i - 1));
      Nat brute = 0;
      for (Nat j = 0; j <= i; ++j) brute = std::max(brute, t[j]);
      CHECK(h(i) == brute);
    }
  }
}

TEST_CASE("resolvent majorant arithmetic") {
  const ResolventMajorant a{1, 0, 0, 1};
  // 3 + 2 + (2 + 1 * 2) * 1
  CHECK(a(1, 3) == 9);
  const ResolventMajorant zero{0, 5, 5, 0};
  for (Nat x = 0; x < 10; ++x) CHECK(zero(17, x) == x);
  const Value v = a.AsValue();
  CHECK(v(NatFn([](Nat) { return 1; }))(Value::OfNat(3)).nat() == 9);
  // alpha(0) is the code j(4, 1) = 19 of the first approximation of 1.
  CHECK(v(CanonicalCodeValue(1))(Value::OfNat(3)).nat() == a(19, 3));
}

TEST_CASE("witnesses") {
  const MajorantWitnesses abs = ComputeWitnesses(*MakeInstance("abs_subdiff"));
  CHECK(abs.c.norm() == 0.0);
  CHECK(abs.gamma_tilde == 1.0);
  CHECK(abs.majorant.n == 0);
  CHECK(abs.majorant.k == 0);
  CHECK(ValidWitnesses(abs.majorant, abs));
  CHECK(ValidWitnesses({3, 3, 3, 3}, abs));
  const MajorantWitnesses neg = ComputeWitnesses(*MakeInstance("neg_half_identity"));
  CHECK(neg.gamma_tilde > 1.0);
  CHECK_FALSE(ValidWitnesses({0, 0, 0, 0}, neg));
}

TEST_CASE("resolvent and chi majorants on the catalog") {
  for (const auto& name : CatalogNames()) {
    const OperatorPtr a = MakeInstance(name);
    CAPTURE(name);
    CHECK(VerifyChiMajorant(a, Opts()).passed());
    if (!a->total_resolvent()) {
      CHECK_THROWS_AS(VerifyResolventMajorant(a, Opts()), Error);
      continue;
    }
    CHECK(VerifyResolventMajorant(a, Opts()).passed());
  }
}

TEST_CASE("custom resolvent majorant") {
  const OperatorPtr abs = MakeInstance("abs_subdiff");
  CHECK(VerifyResolventMajorant(abs, Opts(), ResolventMajorant{2, 1, 2, 1}).passed());
  const OperatorPtr neg = MakeInstance("neg_half_identity");
  try {
    VerifyResolventMajorant(neg, Opts(), ResolventMajorant{0, 0, 0, 0});
    FAIL("witness check must reject the majorant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionViolated);
  }
}

TEST_CASE("minimal-norm majorant") {
  for (const char* name : {"abs_subdiff", "identity", "psd_skew", "two_identity", "zero"}) {
    CAPTURE(name);
    CHECK(VerifyMinimalNormMajorant(MakeInstance(name), Opts()).passed());
  }
  CHECK_THROWS_AS(VerifyMinimalNormMajorant(MakeInstance("tan_subgradient"), Opts()), Error);
}

TEST_CASE("uniform majorants of bounded operators") {
  CHECK(BobsUniformMajorant(*MakeInstance("tan_subgradient")).rule == "NotBounded");
  CHECK_FALSE(BobsUniformMajorant(*MakeInstance("box_normal_cone")).bounded);
  const BobsMajorant abs = BobsUniformMajorant(*MakeInstance("abs_subdiff"));
  CHECK(abs.bounded);
  CHECK(abs.rule == "lambda n. 1");
  for (Nat v : abs.values) CHECK(v == 1);
  for (const char* name : {"psd_skew", "two_identity", "identity"}) {
    const auto a = MakeInstance(name);
    const auto* lin = dynamic_cast<const LinearOperator*>(a.get());
    REQUIRE(lin != nullptr);
    const BobsMajorant b = BobsUniformMajorant(*a);
    REQUIRE(b.values.size() == 9);
    for (Nat n = 0; n < 9; ++n) CHECK(b.values[n] == Nat(std::ceil(lin->operator_norm() * double(n) - 1e-9)));
  }
}
