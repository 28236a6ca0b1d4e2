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

#include "proofmine/term.hpp"

#include <algorithm>
#include <array>

#include "proofmine/error.hpp"

namespace proofmine {

struct Term::Node {
  Kind kind;
  std::string name;
  FinType type;
  ConstKind const_kind = ConstKind::kZero;
  std::vector<FinType> params;
  std::optional<Term> fun;
  std::optional<Term> arg;
  std::size_t size = 1;
};

Term Term::Var(std::string name, FinType type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVar;
  n->name = std::move(name);
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::Const(ConstKind kind, std::vector<FinType> params) {
  if (params.size() != ConstArity(kind))
    throw Error(ErrorCode::kIllTypedApplication,
                ConstName(kind) + " expects " + std::to_string(ConstArity(kind)) + " type parameters");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->const_kind = kind;
  n->params = std::move(params);
  return Term(std::move(n));
}

Term Term::App(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kApp;
  n->size = 1 + fun.size() + arg.size();
  n->fun = std::move(fun);
  n->arg = std::move(arg);
  return Term(std::move(n));
}

Term Term::Apply(Term fun, const std::vector<Term>& args) {
  for (const Term& a : args) fun = App(std::move(fun), a);
  return fun;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const FinType& Term::var_type() const { return node_->type; }
ConstKind Term::const_kind() const { return node_->const_kind; }
const std::vector<FinType>& Term::params() const { return node_->params; }
const Term& Term::fun() const { return *node_->fun; }
const Term& Term::arg() const { return *node_->arg; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar: return a.name() == b.name() && a.var_type() == b.var_type();
    case Term::Kind::kConst: return a.const_kind() == b.const_kind() && a.params() == b.params();
    case Term::Kind::kApp: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

namespace {

struct ConstInfo {
  ConstKind kind;
  const char* name;
  std::size_t arity;
};

constexpr std::array<ConstInfo, 27> kConstTable{{
    {ConstKind::kZero, "0", 0},        {ConstKind::kSucc, "S", 0},
    {ConstKind::kPi, "Pi", 2},         {ConstKind::kSigma, "Sigma", 3},
    {ConstKind::kRec, "R", 1},         {ConstKind::kMonus, "monus", 0},
    {ConstKind::kZeroX, "0X", 0},      {ConstKind::kOneX, "1X", 0},
    {ConstKind::kPlusX, "plusX", 0},   {ConstKind::kNegX, "negX", 0},
    {ConstKind::kScaleX, "scaleX", 0}, {ConstKind::kNormX, "normX", 0},
    {ConstKind::kInnerX, "innerX", 0}, {ConstKind::kPlusR, "plusR", 0},
    {ConstKind::kMulR, "mulR", 0},     {ConstKind::kAbsR, "absR", 0},
    {ConstKind::kRecipR, "recipR", 0}, {ConstKind::kNatR, "natR", 0},
    {ConstKind::kChiA, "chiA", 0},     {ConstKind::kJChi, "J", 0},
    {ConstKind::kGammaTilde, "gammaT", 0}, {ConstKind::kMGamma, "mGamma", 0},
    {ConstKind::kCX, "cX", 0},         {ConstKind::kRhoTilde, "rhoT", 0},
    {ConstKind::kNGamma, "nGamma", 0}, {ConstKind::kACirc, "Acirc", 0},
    {ConstKind::kVarpi, "varpi", 0},
}};

const ConstInfo& Info(ConstKind kind) {
  for (const ConstInfo& c : kConstTable)
    if (c.kind == kind) return c;
  throw Error(ErrorCode::kParseError, "unknown constant");
}

FinType Arr(const FinType& r, const FinType& a) { return FinType::Arrow(r, a); }

}  // namespace

std::string ConstName(ConstKind kind) { return Info(kind).name; }

std::optional<ConstKind> ConstFromName(const std::string& name) {
  for (const ConstInfo& c : kConstTable)
    if (name == c.name) return c.kind;
  return std::nullopt;
}

std::size_t ConstArity(ConstKind kind) { return Info(kind).arity; }

FinType ConstType(ConstKind kind, const std::vector<FinType>& p) {
  const FinType o = FinType::Zero();
  const FinType x = FinType::X();
  const FinType one = TypeOne();
  switch (kind) {
    case ConstKind::kZero: return o;
    case ConstKind::kSucc: return Arr(o, o);
    case ConstKind::kPi: return Arr(Arr(p[0], p[1]), p[0]);
    case ConstKind::kSigma: {
      const FinType& d = p[0];
      const FinType& r = p[1];
      const FinType& t = p[2];
      return Arr(Arr(Arr(t, d), Arr(r, d)), Arr(Arr(t, r), d));
    }
    case ConstKind::kRec: {
      const FinType& r = p[0];
      return Arr(Arr(Arr(r, o), Arr(Arr(r, o), r)), r);
    }
    case ConstKind::kMonus: return Arr(Arr(o, o), o);
    case ConstKind::kZeroX:
    case ConstKind::kOneX:
    case ConstKind::kCX: return x;
    case ConstKind::kPlusX: return Arr(Arr(x, x), x);
    case ConstKind::kNegX:
    case ConstKind::kACirc: return Arr(x, x);
    case ConstKind::kScaleX: return Arr(Arr(x, x), one);
    case ConstKind::kNormX: return Arr(one, x);
    case ConstKind::kInnerX: return Arr(Arr(one, x), x);
    case ConstKind::kPlusR:
    case ConstKind::kMulR: return Arr(Arr(one, one), one);
    case ConstKind::kAbsR: return Arr(one, one);
    case ConstKind::kRecipR: return Arr(Arr(one, one), o);
    case ConstKind::kNatR: return Arr(one, o);
    case ConstKind::kChiA: return Arr(Arr(o, x), x);
    case ConstKind::kJChi: return Arr(Arr(x, x), one);
    case ConstKind::kGammaTilde:
    case ConstKind::kRhoTilde: return one;
    case ConstKind::kMGamma:
    case ConstKind::kNGamma: return o;
    case ConstKind::kVarpi: return Arr(o, o);
  }
  return o;
}

std::string Term::str() const {
  switch (kind()) {
    case Kind::kVar: return name();
    case Kind::kConst: {
      std::string s = ConstName(const_kind());
      if (!params().empty()) {
        s += "[";
        for (std::size_t i = 0; i < params().size(); ++i) {
          if (i) s += ",";
          s += params()[i].str();
        }
        s += "]";
      }
      return s;
    }
    case Kind::kApp: {
      auto [head, args] = Unspine(*this);
      std::string s = "(" + head.str();
      for (const Term& a : args) s += " " + a.str();
      return s + ")";
    }
  }
  return "?";
}

namespace {

FinType Check(const Term& t, const VarContext* ctx, const std::string& path) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (ctx) {
        auto it = ctx->find(t.name());
        if (it == ctx->end())
          throw Error(ErrorCode::kUnboundVariable, "variable '" + t.name() + "' at " + path);
        if (it->second != t.var_type())
          throw Error(ErrorCode::kUnboundVariable, "variable '" + t.name() + "' at " + path +
                                                       " declared " + it->second.str() + ", used as " +
                                                       t.var_type().str());
      }
      return t.var_type();
    case Term::Kind::kConst: return ConstType(t.const_kind(), t.params());
    case Term::Kind::kApp: {
      FinType f = Check(t.fun(), ctx, path + ".fun");
      FinType a = Check(t.arg(), ctx, path + ".arg");
      if (!f.is_arrow())
        throw Error(ErrorCode::kIllTypedApplication,
                    "at " + path + ": applying " + t.fun().str() + " of non-function type " + f.str());
      if (f.argument() != a)
        throw Error(ErrorCode::kIllTypedApplication,
                    "at " + path + ": " + t.fun().str() + " : " + f.str() + " expects " +
                        f.argument().str() + " but " + t.arg().str() + " : " + a.str());
      return f.result();
    }
  }
  return FinType::Zero();
}

}  // namespace

FinType TypeCheck(const Term& t) { return Check(t, nullptr, "root"); }
FinType TypeCheck(const Term& t, const VarContext& ctx) { return Check(t, &ctx, "root"); }

Term Numeral(std::uint64_t n) {
  Term t = Term::Const(ConstKind::kZero);
  const Term s = Term::Const(ConstKind::kSucc);
  for (std::uint64_t i = 0; i < n; ++i) t = Term::App(s, t);
  return t;
}

std::optional<std::uint64_t> AsNumeral(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (cur->is_app()) {
    if (!cur->fun().is_const() || cur->fun().const_kind() != ConstKind::kSucc) return std::nullopt;
    ++n;
    cur = &cur->arg();
  }
  if (cur->is_const() && cur->const_kind() == ConstKind::kZero) return n;
  return std::nullopt;
}

std::pair<Term, std::vector<Term>> Unspine(const Term& t) {
  std::vector<Term> rev;
  const Term* cur = &t;
  while (cur->is_app()) {
    rev.push_back(cur->arg());
    cur = &cur->fun();
  }
  return {*cur, std::vector<Term>(rev.rbegin(), rev.rend())};
}

namespace {

void CollectFree(const Term& t, std::vector<std::pair<std::string, FinType>>& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (std::none_of(out.begin(), out.end(), [&](const auto& v) { return v.first == t.name(); }))
        out.emplace_back(t.name(), t.var_type());
      return;
    case Term::Kind::kConst: return;
    case Term::Kind::kApp:
      CollectFree(t.fun(), out);
      CollectFree(t.arg(), out);
      return;
  }
}

}  // namespace

std::vector<std::pair<std::string, FinType>> FreeVars(const Term& t) {
  std::vector<std::pair<std::string, FinType>> out;
  CollectFree(t, out);
  return out;
}

bool OccursFree(const std::string& name, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar: return t.name() == name;
    case Term::Kind::kConst: return false;
    case Term::Kind::kApp: return OccursFree(name, t.fun()) || OccursFree(name, t.arg());
  }
  return false;
}

Term Substitute(const Term& t, const std::string& name, const Term& s) {
  switch (t.kind()) {
    case Term::Kind::kVar: return t.name() == name ? s : t;
    case Term::Kind::kConst: return t;
    case Term::Kind::kApp: {
      if (!OccursFree(name, t)) return t;
      return Term::App(Substitute(t.fun(), name, s), Substitute(t.arg(), name, s));
    }
  }
  return t;
}

Term Identity(const FinType& r) {
  const FinType rr = FinType::Arrow(r, r);
  Term sigma = Term::Const(ConstKind::kSigma, {r, rr, r});
  Term k1 = Term::Const(ConstKind::kPi, {r, rr});
  Term k2 = Term::Const(ConstKind::kPi, {r, r});
  return Term::Apply(sigma, {k1, k2});
}

Term BracketAbstract(const Term& var, const Term& t) {
  if (!var.is_var())
    throw Error(ErrorCode::kIllTypedApplication, "bracket abstraction over a non-variable");
  const FinType& rho = var.var_type();
  if (t.is_var() && t.name() == var.name()) return Identity(rho);
  if (!OccursFree(var.name(), t)) {
    FinType tau = TypeCheck(t);
    return Term::App(Term::Const(ConstKind::kPi, {tau, rho}), t);
  }
  // t = u v with x free somewhere.
  FinType v_type = TypeCheck(t.arg());
  FinType uv_type = TypeCheck(t);
  Term su = BracketAbstract(var, t.fun());
  Term sv = BracketAbstract(var, t.arg());
  return Term::Apply(Term::Const(ConstKind::kSigma, {rho, v_type, uv_type}), {su, sv});
}

std::optional<Term> ReduceStep(const Term& t) {
  if (!t.is_app()) return std::nullopt;
  auto [head, args] = Unspine(t);
  auto rebuild = [&](Term f, std::size_t consumed) {
    for (std::size_t i = consumed; i < args.size(); ++i) f = Term::App(std::move(f), args[i]);
    return f;
  };
  if (head.is_const()) {
    switch (head.const_kind()) {
      case ConstKind::kPi:
        if (args.size() >= 2) return rebuild(args[0], 2);
        break;
      case ConstKind::kSigma:
        if (args.size() >= 3) {
          const Term& x = args[0];
          const Term& y = args[1];
          const Term& z = args[2];
          return rebuild(Term::App(Term::App(x, z), Term::App(y, z)), 3);
        }
        break;
      case ConstKind::kRec:
        if (args.size() >= 3) {
          const Term& n = args[2];
          if (n.is_const() && n.const_kind() == ConstKind::kZero) return rebuild(args[0], 3);
          if (n.is_app() && n.fun().is_const() && n.fun().const_kind() == ConstKind::kSucc) {
            const Term& pred = n.arg();
            Term inner = Term::Apply(head, {args[0], args[1], pred});
            return rebuild(Term::Apply(args[1], {inner, pred}), 3);
          }
        }
        break;
      case ConstKind::kMonus:
        if (args.size() >= 2) {
          auto a = AsNumeral(args[0]);
          auto b = AsNumeral(args[1]);
          if (a && b) return rebuild(Numeral(*a > *b ? *a - *b : 0), 2);
        }
        break;
      default:
        break;
    }
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (auto next = ReduceStep(args[i])) {
      args[i] = std::move(*next);
      return Term::Apply(head, args);
    }
  }
  return std::nullopt;
}

ReduceResult Reduce(const Term& t, std::uint64_t fuel) {
  ReduceResult r{t, false, 0};
  while (r.steps < fuel) {
    auto next = ReduceStep(r.term);
    if (!next) {
      r.normal = true;
      return r;
    }
    r.term = std::move(*next);
    ++r.steps;
  }
  r.normal = !ReduceStep(r.term).has_value();
  return r;
}

}  // namespace proofmine
