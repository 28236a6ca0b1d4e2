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

#include <random>

#include "doctest.h"
#include "proofmine/error.hpp"
#include "proofmine/model.hpp"
#include "proofmine/syntax.hpp"
#include "proofmine/term.hpp"

using namespace proofmine;

namespace {

const FinType kO = FinType::Zero();
const FinType kOne = PureType(1);

Term S(const Term& t) { return Term::App(Term::Const(ConstKind::kSucc), t); }
Term Var(const char* name, const FinType& t = FinType::Zero()) { return Term::Var(name, t); }

/// Random well-typed terms over 0 and 0(0), with lambdas compiled away by
/// bracket abstraction.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  Term Gen(const FinType& type, std::vector<Term> vars, int depth) {
    if (type.is_arrow()) {
      Term v = Term::Var("v" + std::to_string(fresh_++), type.argument());
      vars.push_back(v);
      return BracketAbstract(v, Gen(type.result(), vars, depth - 1));
    }
    std::vector<Term> zero_vars, fn_vars;
    for (const Term& v : vars) (v.var_type() == kO ? zero_vars : fn_vars).push_back(v);
    const int choice = depth <= 0 ? Pick(2) : Pick(7);
    switch (choice) {
      case 0: return Numeral(Pick(3));
      case 1: return zero_vars.empty() ? Numeral(Pick(3)) : zero_vars[Pick(zero_vars.size())];
      case 2: return S(Gen(kO, vars, depth - 1));
      case 3: {
        const FinType rho = Pick(2) ? kO : kOne;
        return Term::App(Gen(FinType::Arrow(kO, rho), vars, depth - 1), Gen(rho, vars, depth - 1));
      }
      case 4: {
        Term r = Term::Const(ConstKind::kRec, {kO});
        return Term::Apply(r, {Gen(kO, vars, depth - 1), Gen(ParseType("0(0)(0)"), vars, depth - 2), Numeral(Pick(3))});
      }
      case 5:
        return Term::Apply(Term::Const(ConstKind::kMonus), {Gen(kO, vars, depth - 1), Gen(kO, vars, depth - 1)});
      default:
        if (fn_vars.empty()) return S(Gen(kO, vars, depth - 1));
        return Term::App(fn_vars[Pick(fn_vars.size())], Gen(kO, vars, depth - 1));
    }
  }

 private:
  std::size_t Pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937_64 rng_;
  int fresh_ = 0;
};

FiniteModel Unbounded() {
  FiniteModel m;
  m.size = 1'000'000'000;
  return m;
}

}  // namespace

TEST_CASE("typecheck") {
  CHECK(TypeCheck(S(Numeral(0))) == kO);
  const Term chi = Term::Apply(Term::Const(ConstKind::kChiA), {Var("x", FinType::X()), Var("y", FinType::X())});
  CHECK(TypeCheck(chi) == kO);
  const Term proj = Term::Apply(Term::Const(ConstKind::kPi, {kO, kO}), {Var("x"), Var("y")});
  CHECK(TypeCheck(proj) == kO);
  CHECK(TypeCheck(Term::Const(ConstKind::kJChi)) == ParseType("X(X)(1)"));
  CHECK_THROWS_AS(TypeCheck(Term::App(Numeral(0), Numeral(0))), Error);
  CHECK_THROWS_AS(TypeCheck(Term::App(Term::Const(ConstKind::kSucc), Var("x", FinType::X()))), Error);
  VarContext ctx{{"x", kOne}};
  CHECK_THROWS_AS(TypeCheck(Var("x"), ctx), Error);
  CHECK_THROWS_AS(TypeCheck(Var("z"), ctx), Error);
}

TEST_CASE("ill-typed application names the offending subterm") {
  try {
    TypeCheck(S(Term::App(Numeral(1), Numeral(0))));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIllTypedApplication);
    CHECK(std::string(e.what()).find("at root.arg: applying (S 0) of non-function type 0") != std::string::npos);
  }
}

TEST_CASE("reduction rules") {
  const Term a = Numeral(4), b = Numeral(7);
  CHECK(Reduce(Term::Apply(Term::Const(ConstKind::kPi, {kO, kO}), {a, b})).term == a);
  const Term y = Var("y"), z = Var("z", ParseType("0(0)(0)"));
  const Term r = Term::Const(ConstKind::kRec, {kO});
  CHECK(Reduce(Term::Apply(r, {y, z, Numeral(0)})).term == y);
  // R 0 (lambda u, v. S u) 2 = 2
  const Term u = Var("u"), v = Var("v");
  const Term step = BracketAbstract(u, BracketAbstract(v, S(u)));
  const auto res = Reduce(Term::Apply(r, {Numeral(0), step, Numeral(2)}));
  CHECK(res.normal);
  CHECK(AsNumeral(res.term) == 2u);
  // R y z (S n) > z (R y z n) n, one step
  const Term n = Var("n");
  const auto once = ReduceStep(Term::Apply(r, {y, z, S(n)}));
  REQUIRE(once);
  CHECK(*once == Term::Apply(z, {Term::Apply(r, {y, z, n}), n}));
  CHECK(AsNumeral(Reduce(Term::Apply(Term::Const(ConstKind::kMonus), {Numeral(2), Numeral(5)})).term) == 0u);
}

TEST_CASE("bracket abstraction laws") {
  const Term x = Var("x"), s = Numeral(3), y = Var("y");
  CHECK(Reduce(Term::App(BracketAbstract(x, x), s)).term == s);
  CHECK(Reduce(Term::App(BracketAbstract(x, y), s)).term == y);
  CHECK(Reduce(Term::App(BracketAbstract(x, S(x)), Numeral(0))).term == S(Numeral(0)));
  CHECK(BracketAbstract(x, S(x)).str() == "(Sigma[0,0,0] (Pi[0(0),0] S) (Sigma[0,0(0),0] Pi[0,0(0)] Pi[0,0]))");
}

TEST_CASE("fuel exhaustion returns a partial result") {
  // R 0 (lambda u,v. S u) 500 needs more than 100 steps.
  const Term u = Var("u"), v = Var("v");
  const Term t = Term::Apply(Term::Const(ConstKind::kRec, {kO}),
                             {Numeral(0), BracketAbstract(u, BracketAbstract(v, S(u))), Numeral(500)});
  const auto r = Reduce(t, 100);
  CHECK_FALSE(r.normal);
  CHECK(r.steps == 100);
  CHECK(TypeCheck(r.term) == kO);
}

TEST_CASE("evaluation in finite models") {
  FiniteModel m;
  m.size = 3;
  CHECK(Evaluate(S(S(Numeral(0))), m).nat() == 2);
  m.size = 0;
  CHECK(Evaluate(S(Numeral(0)), m).nat() == 0);
  m.size = 3;
  const Term a = Numeral(2);
  CHECK(Evaluate(Term::Apply(Term::Const(ConstKind::kPi, {kO, kO}), {a, Numeral(1)}), m).nat() ==
        Evaluate(a, m).nat());
  Environment env{{"x", Value::OfNat(1)}};
  CHECK(Evaluate(S(Var("x")), m, env).nat() == 2);
}

TEST_CASE("prefix term syntax") {
  const Term t = ParseTerm("(App (App chiA x:X) y:X)");
  CHECK(TypeCheck(t) == kO);
  CHECK(ParseTerm("(S (S 0))") == S(S(Numeral(0))));
  CHECK(ParseTerm("(Pi[0,0] 1 2)") == Term::Apply(Term::Const(ConstKind::kPi, {kO, kO}), {Numeral(1), Numeral(2)}));
  CHECK_THROWS_AS(ParseTerm("(S"), Error);
}

TEST_CASE("random terms: subject reduction, beta simulation, evaluation") {
  TermGen gen(42);
  const FiniteModel model = Unbounded();
  int normalized = 0;
  for (int i = 0; i < 1000; ++i) {
    const FinType type = i % 3 == 0 ? kOne : kO;
    const Term t = gen.Gen(type, {}, 4);
    const FinType ty = TypeCheck(t);
    REQUIRE(ty == type);
    const auto r = Reduce(t);
    CHECK(TypeCheck(r.term) == ty);
    if (r.normal && type == kO) {
      ++normalized;
      CHECK(AsNumeral(r.term).has_value());
      CHECK(Evaluate(t, model).nat() == Evaluate(r.term, model).nat());
    }
  }
  CHECK(normalized > 300);

  const Term x = Var("x");
  for (int i = 0; i < 300; ++i) {
    const Term t = gen.Gen(kO, {x}, 4);
    const Term s = gen.Gen(kO, {}, 2);
    const auto lhs = Reduce(Term::App(BracketAbstract(x, t), s));
    const auto rhs = Reduce(Substitute(t, "x", s));
    REQUIRE(lhs.normal);
    REQUIRE(rhs.normal);
    CHECK(lhs.term == rhs.term);
  }
}
