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

#include "proofmine/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "proofmine/error.hpp"

namespace proofmine {

struct Formula::Node {
  Kind kind;
  Rel rel = Rel::kEq0;
  Pred pred = Pred::kEqAt;
  FinType type;
  std::optional<Term> lhs;
  std::optional<Term> rhs;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::string var;
};

namespace {

Term ZeroReal() {
  const FinType o = FinType::Zero();
  return Term::App(Term::Const(ConstKind::kPi, {o, o}), Term::Const(ConstKind::kZero));
}

Term Norm(const Term& t) { return Term::App(Term::Const(ConstKind::kNormX), t); }

Term MinusX(const Term& a, const Term& b) {
  return Term::Apply(Term::Const(ConstKind::kPlusX), {a, Term::App(Term::Const(ConstKind::kNegX), b)});
}

constexpr double kRealTolerance = 1e-9;

}  // namespace

Formula Formula::Atom(Rel rel, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->rel = rel;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::Defined(Pred pred, FinType type, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kDefined;
  n->pred = pred;
  n->type = (pred == Pred::kEqX || pred == Pred::kMember) ? FinType::X() : std::move(type);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::And(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->left = std::move(a);
  n->right = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::Or(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOr;
  n->left = std::move(a);
  n->right = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::Implies(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kImplies;
  n->left = std::move(a);
  n->right = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::Falsum() {
  static const Formula bot = Eq0(Term::Const(ConstKind::kZero), Numeral(1));
  return bot;
}

Formula Formula::Not(Formula a) { return Implies(std::move(a), Falsum()); }

Formula Formula::Forall(std::string var, FinType type, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kForall;
  n->var = std::move(var);
  n->type = std::move(type);
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::Exists(std::string var, FinType type, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExists;
  n->var = std::move(var);
  n->type = std::move(type);
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::BoundedExists(std::string var, FinType type, Term bound, Formula body) {
  Term v = Term::Var(var, type);
  Formula guard = Defined(Pred::kPreceq, type, v, std::move(bound));
  return Exists(std::move(var), std::move(type), And(std::move(guard), std::move(body)));
}

Formula::Kind Formula::kind() const { return node_->kind; }
Formula::Rel Formula::rel() const { return node_->rel; }
Formula::Pred Formula::pred() const { return node_->pred; }
const FinType& Formula::pred_type() const { return node_->type; }
const Term& Formula::lhs() const { return *node_->lhs; }
const Term& Formula::rhs() const { return *node_->rhs; }
const Formula& Formula::left() const { return *node_->left; }
const Formula& Formula::right() const { return *node_->right; }
const std::string& Formula::var() const { return node_->var; }
const FinType& Formula::var_type() const { return node_->type; }
const Formula& Formula::body() const { return *node_->left; }

bool Formula::is_falsum() const {
  if (kind() != Kind::kAtom || rel() != Rel::kEq0) return false;
  auto a = AsNumeral(lhs());
  auto b = AsNumeral(rhs());
  return a && b && *a == 0 && *b == 1;
}

bool Formula::is_negation() const { return kind() == Kind::kImplies && right().is_falsum(); }

std::string RelName(Formula::Rel rel) {
  switch (rel) {
    case Formula::Rel::kEq0: return "=";
    case Formula::Rel::kLe0: return "<=";
    case Formula::Rel::kEqR: return "=R";
    case Formula::Rel::kLeR: return "<=R";
    case Formula::Rel::kLtR: return "<R";
  }
  return "?";
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::kAtom:
      if (is_falsum()) return "bot";
      return "(" + RelName(rel()) + " " + lhs().str() + " " + rhs().str() + ")";
    case Kind::kDefined:
      switch (pred()) {
        case Pred::kEqAt: return "(eq " + pred_type().str() + " " + lhs().str() + " " + rhs().str() + ")";
        case Pred::kEqX: return "(eqX " + lhs().str() + " " + rhs().str() + ")";
        case Pred::kPreceq:
          return "(preceq " + pred_type().str() + " " + lhs().str() + " " + rhs().str() + ")";
        case Pred::kMember: return "(in " + lhs().str() + " " + rhs().str() + ")";
      }
      return "?";
    case Kind::kAnd: return "(and " + left().str() + " " + right().str() + ")";
    case Kind::kOr: return "(or " + left().str() + " " + right().str() + ")";
    case Kind::kImplies:
      if (is_negation()) return "(not " + left().str() + ")";
      return "(-> " + left().str() + " " + right().str() + ")";
    case Kind::kForall: return "(forall " + var() + " " + var_type().str() + " " + body().str() + ")";
    case Kind::kExists: return "(exists " + var() + " " + var_type().str() + " " + body().str() + ")";
  }
  return "?";
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kAtom: return a.rel() == b.rel() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::kDefined:
      return a.pred() == b.pred() && a.pred_type() == b.pred_type() && a.lhs() == b.lhs() &&
             a.rhs() == b.rhs();
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies: return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return a.var() == b.var() && a.var_type() == b.var_type() && a.body() == b.body();
  }
  return false;
}

std::string FreshNames::Fresh(const std::string& base) {
  std::string candidate = base;
  for (unsigned i = 1; used_.count(candidate); ++i) candidate = base + std::to_string(i);
  used_.insert(candidate);
  return candidate;
}

namespace {

void TermNames(const Term& t, std::set<std::string>& out) {
  for (const auto& [name, type] : FreeVars(t)) out.insert(name);
}

template <typename Visit>
void ForEachNode(const Formula& f, Visit&& visit) {
  visit(f);
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kDefined: return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      ForEachNode(f.left(), visit);
      ForEachNode(f.right(), visit);
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: ForEachNode(f.body(), visit); return;
  }
}

void CollectFree(const Formula& f, std::vector<std::string>& bound, std::vector<TypedVar>& out) {
  auto add_term = [&](const Term& t) {
    for (const auto& [name, type] : FreeVars(t)) {
      if (std::find(bound.begin(), bound.end(), name) != bound.end()) continue;
      if (std::none_of(out.begin(), out.end(), [&](const TypedVar& v) { return v.name == name; }))
        out.push_back({name, type});
    }
  };
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kDefined:
      add_term(f.lhs());
      add_term(f.rhs());
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      CollectFree(f.left(), bound, out);
      CollectFree(f.right(), bound, out);
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      bound.push_back(f.var());
      CollectFree(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::set<std::string> AllNames(const Formula& f) {
  std::set<std::string> names;
  ForEachNode(f, [&](const Formula& n) {
    if (n.kind() == Formula::Kind::kAtom || n.kind() == Formula::Kind::kDefined) {
      TermNames(n.lhs(), names);
      TermNames(n.rhs(), names);
    } else if (n.is_quantifier()) {
      names.insert(n.var());
    }
  });
  return names;
}

std::vector<TypedVar> FreeVariables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<TypedVar> out;
  CollectFree(f, bound, out);
  return out;
}

std::vector<TypedVar> BoundVariables(const Formula& f) {
  std::vector<TypedVar> out;
  ForEachNode(f, [&](const Formula& n) {
    if (n.is_quantifier()) out.push_back({n.var(), n.var_type()});
  });
  return out;
}

bool IsQuantifierFree(const Formula& f) {
  bool qf = true;
  ForEachNode(f, [&](const Formula& n) {
    if (n.is_quantifier()) qf = false;
  });
  return qf;
}

bool ContainsDefined(const Formula& f) {
  bool found = false;
  ForEachNode(f, [&](const Formula& n) {
    if (n.kind() == Formula::Kind::kDefined) found = true;
  });
  return found;
}

std::size_t QuantifierDepth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kDefined: return 0;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies: return std::max(QuantifierDepth(f.left()), QuantifierDepth(f.right()));
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: return 1 + QuantifierDepth(f.body());
  }
  return 0;
}

namespace {

Formula Rebuild(const Formula& f, const std::function<Term(const Term&)>& on_term,
                const std::function<Formula(const Formula&)>& on_sub) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: return Formula::Atom(f.rel(), on_term(f.lhs()), on_term(f.rhs()));
    case Formula::Kind::kDefined:
      return Formula::Defined(f.pred(), f.pred_type(), on_term(f.lhs()), on_term(f.rhs()));
    case Formula::Kind::kAnd: return Formula::And(on_sub(f.left()), on_sub(f.right()));
    case Formula::Kind::kOr: return Formula::Or(on_sub(f.left()), on_sub(f.right()));
    case Formula::Kind::kImplies: return Formula::Implies(on_sub(f.left()), on_sub(f.right()));
    case Formula::Kind::kForall: return Formula::Forall(f.var(), f.var_type(), on_sub(f.body()));
    case Formula::Kind::kExists: return Formula::Exists(f.var(), f.var_type(), on_sub(f.body()));
  }
  return f;
}

Formula Requantify(const Formula& f, std::string var, Formula body) {
  if (f.kind() == Formula::Kind::kForall) return Formula::Forall(std::move(var), f.var_type(), std::move(body));
  return Formula::Exists(std::move(var), f.var_type(), std::move(body));
}

}  // namespace

Formula Substitute(const Formula& f, const std::string& name, const Term& s) {
  if (f.is_quantifier()) {
    if (f.var() == name) return f;
    if (OccursFree(f.var(), s)) {
      std::set<std::string> used = AllNames(f);
      for (const auto& [n, t] : FreeVars(s)) used.insert(n);
      used.insert(name);
      FreshNames fresh(std::move(used));
      std::string renamed = fresh.Fresh(f.var());
      Formula body = Substitute(f.body(), f.var(), Term::Var(renamed, f.var_type()));
      return Requantify(f, renamed, Substitute(body, name, s));
    }
    return Requantify(f, f.var(), Substitute(f.body(), name, s));
  }
  return Rebuild(
      f, [&](const Term& t) { return Substitute(t, name, s); },
      [&](const Formula& sub) { return Substitute(sub, name, s); });
}

Formula RenameBoundApart(const Formula& f) {
  std::set<std::string> used;
  for (const TypedVar& v : FreeVariables(f)) used.insert(v.name);
  std::set<std::string> all = AllNames(f);
  FreshNames fresh(all);
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (g.is_quantifier()) {
      std::string name = g.var();
      Formula body = g.body();
      if (used.count(name)) {
        name = fresh.Fresh(g.var());
        body = Substitute(body, g.var(), Term::Var(name, g.var_type()));
      }
      used.insert(name);
      return Requantify(g, name, go(body));
    }
    return Rebuild(g, [](const Term& t) { return t; }, go);
  };
  return go(f);
}

namespace {

void ExpectType(const Term& t, const FinType& expected, const VarContext& ctx, const std::string& where) {
  FinType got = TypeCheck(t, ctx);
  if (got != expected)
    throw Error(ErrorCode::kIllTypedApplication,
                where + ": " + t.str() + " has type " + got.str() + ", expected " + expected.str());
}

}  // namespace

void TypeCheckFormula(const Formula& f, const VarContext& ctx_in) {
  VarContext ctx = ctx_in;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::kAtom: {
        FinType t = (g.rel() == Formula::Rel::kEq0 || g.rel() == Formula::Rel::kLe0) ? FinType::Zero()
                                                                                   : TypeOne();
        ExpectType(g.lhs(), t, ctx, g.str());
        ExpectType(g.rhs(), t, ctx, g.str());
        return;
      }
      case Formula::Kind::kDefined:
        ExpectType(g.lhs(), g.pred_type(), ctx, g.str());
        ExpectType(g.rhs(), g.pred_type(), ctx, g.str());
        return;
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr:
      case Formula::Kind::kImplies:
        go(g.left());
        go(g.right());
        return;
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        auto saved = ctx.find(g.var()) != ctx.end() ? std::optional<FinType>(ctx[g.var()]) : std::nullopt;
        ctx[g.var()] = g.var_type();
        go(g.body());
        if (saved) ctx[g.var()] = *saved;
        else ctx.erase(g.var());
        return;
      }
    }
  };
  go(f);
}

namespace {

/// forall y1..yk base(s y1..yk, t y1..yk) for a type with the given head.
Formula ExpandPointwise(const FinType& type, const Term& s, const Term& t, FreshNames& fresh,
                        const std::function<Formula(const FinType&, const Term&, const Term&)>& base) {
  std::vector<FinType> args = type.arguments();
  std::vector<TypedVar> ys;
  for (const FinType& a : args) ys.push_back({fresh.Fresh("z"), a});
  std::vector<Term> terms;
  for (const TypedVar& y : ys) terms.push_back(y.var());
  Formula body = base(type.head(), Term::Apply(s, terms), Term::Apply(t, terms));
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) body = Formula::Forall(it->name, it->type, body);
  return body;
}

Formula ExpandWith(const Formula& f, FreshNames& fresh) {
  if (f.kind() != Formula::Kind::kDefined) {
    return Rebuild(f, [](const Term& t) { return t; },
                   [&](const Formula& sub) { return ExpandWith(sub, fresh); });
  }
  auto eq_x = [](const Term& s, const Term& t) {
    return Formula::Atom(Formula::Rel::kEqR, Norm(MinusX(s, t)), ZeroReal());
  };
  switch (f.pred()) {
    case Formula::Pred::kEqX: return eq_x(f.lhs(), f.rhs());
    case Formula::Pred::kMember:
      return Formula::Eq0(Term::Apply(Term::Const(ConstKind::kChiA), {f.rhs(), f.lhs()}),
                          Term::Const(ConstKind::kZero));
    case Formula::Pred::kEqAt:
      return ExpandPointwise(f.pred_type(), f.lhs(), f.rhs(), fresh,
                             [&](const FinType& head, const Term& s, const Term& t) {
                               return head.is_x() ? eq_x(s, t) : Formula::Eq0(s, t);
                             });
    case Formula::Pred::kPreceq:
      return ExpandPointwise(f.pred_type(), f.lhs(), f.rhs(), fresh,
                             [&](const FinType& head, const Term& s, const Term& t) {
                               return head.is_x() ? Formula::Atom(Formula::Rel::kLeR, Norm(s), Norm(t))
                                                  : Formula::Le0(s, t);
                             });
  }
  return f;
}

}  // namespace

Formula ExpandDefined(const Formula& f) {
  FreshNames fresh(AllNames(f));
  return ExpandWith(f, fresh);
}

namespace {

Formula Star(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kDefined: return f;
    case Formula::Kind::kAnd: return Formula::And(Star(f.left()), Star(f.right()));
    case Formula::Kind::kOr: return Formula::Or(Star(f.left()), Star(f.right()));
    case Formula::Kind::kImplies: return Formula::Implies(Star(f.left()), Star(f.right()));
    case Formula::Kind::kExists: return Formula::Exists(f.var(), f.var_type(), Star(f.body()));
    case Formula::Kind::kForall:
      return Formula::Forall(f.var(), f.var_type(), Formula::Not(Formula::Not(Star(f.body()))));
  }
  return f;
}

}  // namespace

Formula NegativeTranslation(const Formula& f) { return Formula::Not(Formula::Not(Star(f))); }

std::string QuantifierClassName(QuantifierClass c) {
  switch (c) {
    case QuantifierClass::kForallFormula: return "forall_formula";
    case QuantifierClass::kExistsFormula: return "exists_formula";
    case QuantifierClass::kNeither: return "neither";
  }
  return "?";
}

namespace {

/// Quantifier-free in the sense of the Delta matrix: no quantifiers and no
/// defined predicate hiding one (preceq and =_rho at arrow types).
bool IsQfMatrix(const Formula& f) {
  bool ok = true;
  ForEachNode(f, [&](const Formula& n) {
    if (n.is_quantifier()) ok = false;
    if (n.kind() == Formula::Kind::kDefined && n.pred_type().is_arrow()) ok = false;
  });
  return ok;
}

}  // namespace

QuantifierClass ClassifyQuantifierClass(const Formula& f) {
  auto strip = [&](Formula::Kind kind) -> std::optional<Formula> {
    Formula cur = f;
    while (cur.kind() == kind) {
      if (!IsAdmissible(cur.var_type())) return std::nullopt;
      cur = cur.body();
    }
    return cur;
  };
  if (auto rest = strip(Formula::Kind::kForall); rest && IsQfMatrix(*rest))
    return QuantifierClass::kForallFormula;
  if (auto rest = strip(Formula::Kind::kExists); rest && IsQfMatrix(*rest))
    return QuantifierClass::kExistsFormula;
  return QuantifierClass::kNeither;
}

std::optional<DeltaForm> DeltaRecognize(const Formula& f) {
  DeltaForm d{{}, {}, {}, Formula::Falsum()};
  Formula cur = f;
  while (cur.kind() == Formula::Kind::kForall) {
    if (!IsAdmissible(cur.var_type())) return std::nullopt;
    d.a_vars.push_back({cur.var(), cur.var_type()});
    cur = cur.body();
  }
  auto is_a_var = [&](const std::string& name) {
    return std::any_of(d.a_vars.begin(), d.a_vars.end(), [&](const TypedVar& v) { return v.name == name; });
  };
  while (cur.kind() == Formula::Kind::kExists) {
    const Formula& body = cur.body();
    if (body.kind() != Formula::Kind::kAnd) return std::nullopt;
    const Formula& guard = body.left();
    if (guard.kind() != Formula::Kind::kDefined || guard.pred() != Formula::Pred::kPreceq) return std::nullopt;
    if (guard.pred_type() != cur.var_type()) return std::nullopt;
    if (!guard.lhs().is_var() || guard.lhs().name() != cur.var()) return std::nullopt;
    if (!IsAdmissible(cur.var_type())) return std::nullopt;
    for (const auto& [name, type] : FreeVars(guard.rhs()))
      if (!is_a_var(name)) return std::nullopt;
    d.b_vars.push_back({{cur.var(), cur.var_type()}, guard.rhs()});
    cur = body.right();
  }
  while (cur.kind() == Formula::Kind::kForall) {
    if (!IsAdmissible(cur.var_type())) return std::nullopt;
    d.c_vars.push_back({cur.var(), cur.var_type()});
    cur = cur.body();
  }
  if (!IsQfMatrix(cur)) return std::nullopt;
  d.matrix = cur;
  return d;
}

std::string FunctionVarStem(const std::string& name) {
  std::string s = name;
  if (!s.empty() && std::islower(static_cast<unsigned char>(s[0])))
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  else
    s = "F" + s;
  return s;
}

Formula SkolemizeDelta(const DeltaForm& d) {
  std::set<std::string> used = AllNames(d.matrix);
  for (const TypedVar& v : d.a_vars) used.insert(v.name);
  for (const BoundedVar& b : d.b_vars) used.insert(b.var.name);
  for (const TypedVar& v : d.c_vars) used.insert(v.name);
  FreshNames fresh(std::move(used));

  std::vector<FinType> a_types;
  std::vector<Term> a_terms;
  for (const TypedVar& a : d.a_vars) {
    a_types.push_back(a.type);
    a_terms.push_back(a.var());
  }

  Formula matrix = d.matrix;
  std::vector<std::pair<TypedVar, Term>> skolem;
  for (const BoundedVar& b : d.b_vars) {
    TypedVar big{fresh.Fresh(FunctionVarStem(b.var.name)), CurriedType(b.var.type, a_types)};
    Term bound = b.bound;
    for (auto it = d.a_vars.rbegin(); it != d.a_vars.rend(); ++it) bound = BracketAbstract(it->var(), bound);
    matrix = Substitute(matrix, b.var.name, Term::Apply(big.var(), a_terms));
    skolem.emplace_back(big, bound);
  }
  Formula body = matrix;
  for (auto it = d.c_vars.rbegin(); it != d.c_vars.rend(); ++it) body = Formula::Forall(it->name, it->type, body);
  for (auto it = d.a_vars.rbegin(); it != d.a_vars.rend(); ++it) body = Formula::Forall(it->name, it->type, body);
  for (auto it = skolem.rbegin(); it != skolem.rend(); ++it)
    body = Formula::BoundedExists(it->first.name, it->first.type, it->second, body);
  return body;
}

namespace {

bool EvalAtom(const Formula& f, const FiniteModel& m, const Environment& env) {
  Value a = Evaluate(f.lhs(), m, env);
  Value b = Evaluate(f.rhs(), m, env);
  switch (f.rel()) {
    case Formula::Rel::kEq0: return a.nat() == b.nat();
    case Formula::Rel::kLe0: return a.nat() <= b.nat();
    case Formula::Rel::kEqR: return std::abs(AsReal(a, m) - AsReal(b, m)) <= kRealTolerance;
    case Formula::Rel::kLeR: return AsReal(a, m) <= AsReal(b, m) + kRealTolerance;
    case Formula::Rel::kLtR: return AsReal(a, m) < AsReal(b, m) - kRealTolerance;
  }
  return false;
}

bool Eval(const Formula& f, const FiniteModel& m, Environment& env) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: return EvalAtom(f, m, env);
    case Formula::Kind::kDefined: {
      std::set<std::string> used = AllNames(f);
      for (const auto& [name, v] : env) used.insert(name);
      FreshNames fresh(std::move(used));
      return Eval(ExpandWith(f, fresh), m, env);
    }
    case Formula::Kind::kAnd: return Eval(f.left(), m, env) && Eval(f.right(), m, env);
    case Formula::Kind::kOr: return Eval(f.left(), m, env) || Eval(f.right(), m, env);
    case Formula::Kind::kImplies: return !Eval(f.left(), m, env) || Eval(f.right(), m, env);
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      const bool universal = f.kind() == Formula::Kind::kForall;
      TypeSpace space(m, f.var_type());
      auto saved = env.find(f.var()) != env.end() ? std::optional<Value>(env[f.var()]) : std::nullopt;
      bool result = universal;
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        env[f.var()] = space.at(i);
        bool v = Eval(f.body(), m, env);
        if (universal && !v) {
          result = false;
          break;
        }
        if (!universal && v) {
          result = true;
          break;
        }
      }
      if (saved) env[f.var()] = *saved;
      else env.erase(f.var());
      return result;
    }
  }
  return false;
}

}  // namespace

bool EvalFormula(const Formula& f, const FiniteModel& model, const Environment& env) {
  Environment local = env;
  return Eval(f, model, local);
}

}  // namespace proofmine
