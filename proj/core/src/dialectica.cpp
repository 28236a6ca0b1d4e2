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

#include <algorithm>
#include <sstream>

#include "proofmine/error.hpp"
#include "proofmine/formula.hpp"

namespace proofmine {

namespace {

std::vector<FinType> TypesOf(const std::vector<TypedVar>& vars) {
  std::vector<FinType> out;
  for (const TypedVar& v : vars) out.push_back(v.type);
  return out;
}

std::vector<Term> TermsOf(const std::vector<TypedVar>& vars) {
  std::vector<Term> out;
  for (const TypedVar& v : vars) out.push_back(v.var());
  return out;
}

std::vector<TypedVar> Concat(std::vector<TypedVar> a, const std::vector<TypedVar>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Interpreter {
 public:
  explicit Interpreter(std::set<std::string> used) : fresh_(std::move(used)) {}

  DialecticaForm Run(const Formula& f) {
    // Quantifier-free formulas are decidable and interpret themselves.
    if (IsQuantifierFree(f)) return {{}, {}, f};
    switch (f.kind()) {
      case Formula::Kind::kAtom:
      case Formula::Kind::kDefined: return {{}, {}, f};
      case Formula::Kind::kAnd: {
        DialecticaForm a = Run(f.left());
        DialecticaForm b = Run(f.right());
        return {Concat(a.ex_vars, b.ex_vars), Concat(a.univ_vars, b.univ_vars),
                Formula::And(a.matrix, b.matrix)};
      }
      case Formula::Kind::kOr: {
        DialecticaForm a = Run(f.left());
        DialecticaForm b = Run(f.right());
        TypedVar z{fresh_.Fresh("z"), FinType::Zero()};
        Formula is_zero = Formula::Eq0(z.var(), Term::Const(ConstKind::kZero));
        Formula matrix = Formula::And(Formula::Implies(is_zero, a.matrix),
                                      Formula::Implies(Formula::Not(is_zero), b.matrix));
        return {Concat(Concat({z}, a.ex_vars), b.ex_vars), Concat(a.univ_vars, b.univ_vars), matrix};
      }
      case Formula::Kind::kImplies: {
        DialecticaForm a = Run(f.left());
        DialecticaForm b = Run(f.right());
        const std::vector<FinType> x_types = TypesOf(a.ex_vars);
        const std::vector<FinType> xv_types = TypesOf(Concat(a.ex_vars, b.univ_vars));
        const std::vector<Term> x_terms = TermsOf(a.ex_vars);
        const std::vector<Term> xv_terms = TermsOf(Concat(a.ex_vars, b.univ_vars));

        std::vector<TypedVar> ex;
        Formula premise = a.matrix;
        for (const TypedVar& y : a.univ_vars) {
          TypedVar big{fresh_.Fresh(FunctionVarStem(y.name)), CurriedType(y.type, xv_types)};
          premise = Substitute(premise, y.name, Term::Apply(big.var(), xv_terms));
          ex.push_back(big);
        }
        Formula conclusion = b.matrix;
        std::vector<TypedVar> us;
        for (const TypedVar& u : b.ex_vars) {
          TypedVar big{fresh_.Fresh(FunctionVarStem(u.name)), CurriedType(u.type, x_types)};
          conclusion = Substitute(conclusion, u.name, Term::Apply(big.var(), x_terms));
          us.push_back(big);
        }
        return {Concat(us, ex), Concat(a.ex_vars, b.univ_vars), Formula::Implies(premise, conclusion)};
      }
      case Formula::Kind::kExists: {
        DialecticaForm a = Run(f.body());
        return {Concat({{f.var(), f.var_type()}}, a.ex_vars), a.univ_vars, a.matrix};
      }
      case Formula::Kind::kForall: {
        DialecticaForm a = Run(f.body());
        TypedVar z{f.var(), f.var_type()};
        std::vector<TypedVar> ex;
        Formula matrix = a.matrix;
        for (const TypedVar& x : a.ex_vars) {
          TypedVar big{fresh_.Fresh(FunctionVarStem(x.name)), FinType::Arrow(x.type, z.type)};
          matrix = Substitute(matrix, x.name, Term::App(big.var(), z.var()));
          ex.push_back(big);
        }
        return {ex, Concat({z}, a.univ_vars), matrix};
      }
    }
    return {{}, {}, f};
  }

 private:
  FreshNames fresh_;
};

}  // namespace

Formula DialecticaForm::AsFormula() const {
  Formula out = matrix;
  for (auto it = univ_vars.rbegin(); it != univ_vars.rend(); ++it) out = Formula::Forall(it->name, it->type, out);
  for (auto it = ex_vars.rbegin(); it != ex_vars.rend(); ++it) out = Formula::Exists(it->name, it->type, out);
  return out;
}

DialecticaForm Dialectica(const Formula& f) {
  Formula prepared = RenameBoundApart(ExpandDefined(f));
  Interpreter interp(AllNames(prepared));
  return interp.Run(prepared);
}

namespace {

std::uint64_t SpaceSize(const FiniteModel& model, const std::vector<TypedVar>& vars, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const TypedVar& v : vars) {
    auto n = TypeSpace::Count(model, v.type);
    if (!n) throw Error(ErrorCode::kUnsupportedType, "cannot enumerate " + v.name + " : " + v.type.str());
    if (*n != 0 && total > cap / *n) return cap + 1;
    total *= *n;
  }
  return total;
}

}  // namespace

SoundnessReport CheckInterpretationSoundness(const Formula& f, const FiniteModel& model,
                                             std::uint64_t work_budget) {
  if (!FreeVariables(f).empty())
    throw Error(ErrorCode::kPreconditionViolated, "soundness check needs a closed formula");
  SoundnessReport report;
  report.formula = f.str();
  DialecticaForm d = Dialectica(f);
  for (const TypedVar& v : d.ex_vars) {
    if (!v.type.in_t()) throw Error(ErrorCode::kTypeContainsX, v.name + " has a type mentioning X");
    if (Degree(v.type) > 1) throw Error(ErrorCode::kUnsupportedType, v.name + " has degree above 1");
  }
  report.ex_space = SpaceSize(model, d.ex_vars, work_budget);
  report.univ_space = SpaceSize(model, d.univ_vars, work_budget);
  if (report.ex_space > work_budget || report.univ_space > work_budget ||
      report.ex_space * report.univ_space > work_budget)
    throw Error(ErrorCode::kEnumerationBudgetExceeded, "Dialectica search space exceeds the work budget");

  report.value = EvalFormula(f, model);
  report.negative_translation_value = EvalFormula(NegativeTranslation(f), model);

  Formula universal = d.matrix;
  for (auto it = d.univ_vars.rbegin(); it != d.univ_vars.rend(); ++it)
    universal = Formula::Forall(it->name, it->type, universal);

  std::vector<TypeSpace> spaces;
  for (const TypedVar& v : d.ex_vars) spaces.emplace_back(model, v.type);
  std::vector<std::uint64_t> index(spaces.size(), 0);
  Environment env;
  for (std::uint64_t step = 0; step < report.ex_space; ++step) {
    for (std::size_t i = 0; i < spaces.size(); ++i) env[d.ex_vars[i].name] = spaces[i].at(index[i]);
    if (EvalFormula(universal, model, env)) {
      report.dialectica_value = true;
      std::ostringstream w;
      for (std::size_t i = 0; i < spaces.size(); ++i)
        w << (i ? " " : "") << d.ex_vars[i].name << "=#" << index[i];
      report.witness = w.str();
      break;
    }
    for (std::size_t i = spaces.size(); i-- > 0;) {
      if (++index[i] < spaces[i].size()) break;
      index[i] = 0;
    }
  }
  return report;
}

namespace {

class CorpusGenerator {
 public:
  CorpusGenerator(std::uint64_t seed, const CorpusOptions& options) : rng_(seed), options_(options) {}

  Formula Next(std::vector<std::string>& scope, std::size_t quantifier_budget, int size_budget) {
    std::uniform_int_distribution<int> pick(0, 9);
    int choice = pick(rng_);
    if (size_budget <= 0) choice = 0;
    if (quantifier_budget == 0 && choice >= 7) choice = choice % 7;
    if (choice <= 2) return RandomAtom(scope);
    if (choice <= 6) {
      Formula a = Next(scope, quantifier_budget, size_budget - 2);
      Formula b = Next(scope, quantifier_budget, size_budget - 2);
      switch (choice) {
        case 3: return Formula::And(a, b);
        case 4: return Formula::Or(a, b);
        case 5: return Formula::Implies(a, b);
        default: return Formula::Not(a);
      }
    }
    std::string name = "x" + std::to_string(counter_++);
    scope.push_back(name);
    Formula body = Next(scope, quantifier_budget - 1, size_budget - 1);
    scope.pop_back();
    if (choice <= 8) return Formula::Forall(name, FinType::Zero(), body);
    return Formula::Exists(name, FinType::Zero(), body);
  }

  Formula RandomAtom(const std::vector<std::string>& scope) {
    auto term = [&]() -> Term {
      std::uniform_int_distribution<std::size_t> pick(0, scope.size() + 1);
      std::size_t k = pick(rng_);
      if (k < scope.size()) {
        Term v = Term::Var(scope[k], FinType::Zero());
        if (std::bernoulli_distribution(0.25)(rng_)) return Term::App(Term::Const(ConstKind::kSucc), v);
        return v;
      }
      return Numeral(std::uniform_int_distribution<Nat>(0, options_.model_size)(rng_));
    };
    Term a = term();
    Term b = term();
    return std::bernoulli_distribution(0.5)(rng_) ? Formula::Eq0(a, b) : Formula::Le0(a, b);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  CorpusOptions options_;
  unsigned counter_ = 0;
};

bool WithinBudget(const Formula& f, const FiniteModel& model, const CorpusOptions& options) {
  if (QuantifierDepth(f) == 0) return false;
  DialecticaForm d = Dialectica(f);
  for (const TypedVar& v : d.ex_vars)
    if (Degree(v.type) > options.max_skolem_degree) return false;
  for (const TypedVar& v : Concat(d.ex_vars, d.univ_vars))
    if (!TypeSpace::Count(model, v.type)) return false;
  std::uint64_t ex = SpaceSize(model, d.ex_vars, options.work_budget);
  std::uint64_t univ = SpaceSize(model, d.univ_vars, options.work_budget);
  return ex <= options.work_budget && univ <= options.work_budget && ex * univ <= options.work_budget;
}

}  // namespace

std::vector<Formula> GenerateFormulaCorpus(std::uint64_t seed, const CorpusOptions& options) {
  FiniteModel model;
  model.size = options.model_size;
  CorpusGenerator gen(seed, options);
  std::vector<Formula> out;
  std::set<std::string> seen;
  for (std::size_t attempt = 0; out.size() < options.count && attempt < 200 * options.count + 1000; ++attempt) {
    std::vector<std::string> scope;
    Formula f = gen.Next(scope, options.max_quantifier_depth, 6);
    if (!WithinBudget(f, model, options)) continue;
    if (!seen.insert(f.str()).second) continue;
    out.push_back(f);
  }
  return out;
}

}  // namespace proofmine
