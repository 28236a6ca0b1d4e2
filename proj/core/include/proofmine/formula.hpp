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

#ifndef PROOFMINE_FORMULA_HPP_
#define PROOFMINE_FORMULA_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "proofmine/model.hpp"
#include "proofmine/term.hpp"
#include "proofmine/types.hpp"

namespace proofmine {

struct TypedVar {
  std::string name;
  FinType type;

  Term var() const { return Term::Var(name, type); }
  friend bool operator==(const TypedVar& a, const TypedVar& b) {
    return a.name == b.name && a.type == b.type;
  }
};

/// Formula AST. Prime formulas are s =_0 t; s <=_0 t is kept as a decidable
/// prime (it abbreviates monus s t =_0 0). Real relations =_R, <=_R, <_R
/// are treated as atomic. Defined predicates (=_rho, =_X, preceq_rho,
/// membership y in Ax) are removed by ExpandDefined. Negation is A -> bot
/// with bot := 0 =_0 S 0.
class Formula {
 public:
  enum class Kind { kAtom, kDefined, kAnd, kOr, kImplies, kForall, kExists };
  enum class Rel { kEq0, kLe0, kEqR, kLeR, kLtR };
  enum class Pred { kEqAt, kEqX, kPreceq, kMember };

  static Formula Atom(Rel rel, Term lhs, Term rhs);
  static Formula Eq0(Term lhs, Term rhs) { return Atom(Rel::kEq0, std::move(lhs), std::move(rhs)); }
  static Formula Le0(Term lhs, Term rhs) { return Atom(Rel::kLe0, std::move(lhs), std::move(rhs)); }
  /// For kEqAt and kPreceq the type is the one the predicate is taken at;
  /// it is ignored for kEqX and kMember. For kMember lhs is y and rhs is x
  /// in "y in Ax".
  static Formula Defined(Pred pred, FinType type, Term lhs, Term rhs);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Implies(Formula a, Formula b);
  static Formula Not(Formula a);
  static Formula Falsum();
  static Formula Forall(std::string var, FinType type, Formula body);
  static Formula Exists(std::string var, FinType type, Formula body);
  /// exists b (b preceq_type bound /\ body)
  static Formula BoundedExists(std::string var, FinType type, Term bound, Formula body);

  Kind kind() const;
  Rel rel() const;
  Pred pred() const;
  const FinType& pred_type() const;
  const Term& lhs() const;
  const Term& rhs() const;
  const Formula& left() const;
  const Formula& right() const;
  const std::string& var() const;
  const FinType& var_type() const;
  const Formula& body() const;

  bool is_quantifier() const { return kind() == Kind::kForall || kind() == Kind::kExists; }
  bool is_falsum() const;
  /// Matches A -> bot.
  bool is_negation() const;

  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string RelName(Formula::Rel rel);

/// Generates fresh names, avoiding a growing set of used names. Names are
/// deterministic: base, then base1, base2, ...
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(std::set<std::string> used) : used_(std::move(used)) {}
  void Reserve(const std::string& name) { used_.insert(name); }
  std::string Fresh(const std::string& base);

 private:
  std::set<std::string> used_;
};

/// Name stem for a function variable standing for x: the capitalised name.
std::string FunctionVarStem(const std::string& name);

/// Every variable name occurring in f, bound or free.
std::set<std::string> AllNames(const Formula& f);
std::vector<TypedVar> FreeVariables(const Formula& f);
std::vector<TypedVar> BoundVariables(const Formula& f);

bool IsQuantifierFree(const Formula& f);
bool ContainsDefined(const Formula& f);
std::size_t QuantifierDepth(const Formula& f);

/// Capture-avoiding substitution of a term for a free variable.
Formula Substitute(const Formula& f, const std::string& name, const Term& s);

/// Renames bound variables so that every binder is unique and distinct from
/// the free variables.
Formula RenameBoundApart(const Formula& f);

/// Throws on ill-typed atoms or unbound variables (free variables must be
/// listed in ctx).
void TypeCheckFormula(const Formula& f, const VarContext& ctx = {});

Formula ExpandDefined(const Formula& f);

/// Kuroda negative translation A' = not not A*.
Formula NegativeTranslation(const Formula& f);

struct DialecticaForm {
  std::vector<TypedVar> ex_vars;
  std::vector<TypedVar> univ_vars;
  Formula matrix;

  /// exists ex forall univ matrix, as a formula.
  Formula AsFormula() const;
};

/// Goedel functional interpretation A^D = exists x forall y A_D(x,y).
DialecticaForm Dialectica(const Formula& f);

enum class QuantifierClass { kForallFormula, kExistsFormula, kNeither };
std::string QuantifierClassName(QuantifierClass c);
/// Quantifier-free formulas count as forall-formulas.
QuantifierClass ClassifyQuantifierClass(const Formula& f);

struct BoundedVar {
  TypedVar var;
  /// Bound term r a, free only in the a-variables.
  Term bound;
};

/// forall a exists b preceq r a forall c F_qf
struct DeltaForm {
  std::vector<TypedVar> a_vars;
  std::vector<BoundedVar> b_vars;
  std::vector<TypedVar> c_vars;
  Formula matrix;
};

std::optional<DeltaForm> DeltaRecognize(const Formula& f);
/// exists B preceq r forall a forall c F(a, B a, c), with r the bound terms
/// abstracted over the a-variables.
Formula SkolemizeDelta(const DeltaForm& d);

/// Classical truth in a finite model by exhaustive quantification.
/// Quantifiers over X range over the model's sample list, so results there
/// only ever falsify.
bool EvalFormula(const Formula& f, const FiniteModel& model, const Environment& env = {});

struct SoundnessReport {
  std::string formula;
  bool value = false;
  bool negative_translation_value = false;
  bool dialectica_value = false;
  std::uint64_t ex_space = 0;
  std::uint64_t univ_space = 0;
  /// Witness description when the interpretation is satisfied.
  std::string witness;

  bool agrees() const { return value == negative_translation_value && value == dialectica_value; }
};

/// Checks eval(f) = eval(f') and eval(f) = exists x forall y A_D by brute
/// force. f must be closed and X-free, with existential Dialectica variables
/// of degree at most 1.
SoundnessReport CheckInterpretationSoundness(const Formula& f, const FiniteModel& model,
                                             std::uint64_t work_budget = 50'000'000);

struct CorpusOptions {
  std::size_t count = 30;
  std::size_t max_quantifier_depth = 2;
  unsigned max_skolem_degree = 1;
  Nat model_size = 2;
  std::uint64_t work_budget = 2'000'000;
};

/// Random closed X-free formulas over type 0 whose Dialectica variables stay
/// within the budget. Deterministic for a given seed.
std::vector<Formula> GenerateFormulaCorpus(std::uint64_t seed, const CorpusOptions& options = {});

}  // namespace proofmine

#endif  // PROOFMINE_FORMULA_HPP_
