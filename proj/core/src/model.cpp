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

#include "proofmine/model.hpp"

#include <cmath>
#include <limits>

#include "proofmine/error.hpp"
#include "proofmine/real_codes.hpp"

namespace proofmine {

Nat Value::nat() const {
  if (auto p = std::get_if<Nat>(&v_)) return *p;
  throw Error(ErrorCode::kUnsupportedType, "value is not a natural");
}

double Value::real() const {
  if (auto p = std::get_if<Real>(&v_)) return p->value;
  throw Error(ErrorCode::kUnsupportedType, "value is not a real");
}

const Vec& Value::point() const {
  if (auto p = std::get_if<Vec>(&v_)) return *p;
  throw Error(ErrorCode::kUnsupportedType, "value is not a point of X");
}

Value Value::operator()(const Value& arg) const {
  if (auto p = std::get_if<std::shared_ptr<const Fn>>(&v_)) return (**p)(arg);
  throw Error(ErrorCode::kUnsupportedType, "applying a non-function value");
}

int FiniteModel::dimension() const {
  if (!x_points.empty()) return static_cast<int>(x_points.front().size());
  if (c_x.size() > 0) return static_cast<int>(c_x.size());
  return 1;
}

namespace {

bool SaturatingPow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, std::uint64_t& out) {
  out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return false;
    out *= base;
  }
  return true;
}

/// Degree-1 arity over 0, or nullopt.
std::optional<std::size_t> TableArity(const FinType& t) {
  if (!t.head().is_zero()) return std::nullopt;
  std::size_t k = 0;
  for (const FinType& a : t.arguments()) {
    if (!a.is_zero()) return std::nullopt;
    ++k;
  }
  return k;
}

Value TableLookup(std::shared_ptr<const std::vector<Nat>> table, Nat base, std::size_t remaining,
                  std::uint64_t offset) {
  if (remaining == 0) return Value::OfNat((*table)[offset]);
  return Value::OfFn([table, base, remaining, offset](const Value& a) {
    Nat n = std::min(a.nat(), base - 1);
    std::uint64_t stride = 1;
    for (std::size_t i = 1; i < remaining; ++i) stride *= base;
    return TableLookup(table, base, remaining - 1, offset + n * stride);
  });
}

}  // namespace

Value TableFunction(const FiniteModel& model, std::size_t arity, std::vector<Nat> table) {
  auto shared = std::make_shared<const std::vector<Nat>>(std::move(table));
  return TableLookup(shared, model.size + 1, arity, 0);
}

std::optional<std::uint64_t> TypeSpace::Count(const FiniteModel& model, const FinType& type) {
  if (type.is_x()) return model.x_points.size();
  auto arity = TableArity(type);
  if (!arity) return std::nullopt;
  const std::uint64_t base = model.size + 1;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
  std::uint64_t table_size = 0;
  if (!SaturatingPow(base, *arity, cap, table_size)) return cap;
  std::uint64_t count = 0;
  if (!SaturatingPow(base, table_size, cap, count)) return cap;
  return count;
}

TypeSpace::TypeSpace(const FiniteModel& model, const FinType& type) : model_(&model), type_(type) {
  auto count = Count(model, type);
  if (!count)
    throw Error(ErrorCode::kUnsupportedType, "cannot enumerate type " + type.str() + " in a finite model");
  if (*count > model.enumeration_budget)
    throw Error(ErrorCode::kEnumerationBudgetExceeded,
                "type " + type.str() + " has " + std::to_string(*count) + " values, budget " +
                    std::to_string(model.enumeration_budget));
  size_ = *count;
  if (!type.is_x()) {
    arity_ = *TableArity(type);
    SaturatingPow(model.size + 1, arity_, std::numeric_limits<std::uint64_t>::max(), table_size_);
  }
}

Value TypeSpace::at(std::uint64_t index) const {
  if (type_.is_x()) return Value::OfPoint(model_->x_points.at(index));
  if (arity_ == 0) return Value::OfNat(index);
  const Nat base = model_->size + 1;
  std::vector<Nat> table(table_size_);
  for (std::uint64_t i = table_size_; i-- > 0;) {
    table[i] = index % base;
    index /= base;
  }
  return TableFunction(*model_, arity_, std::move(table));
}

double AsReal(const Value& v, const FiniteModel& model) {
  if (v.is_real()) return v.real();
  if (v.is_nat()) return static_cast<double>(v.nat());
  Value at = v(Value::OfNat(model.size));
  return RatValueDouble(at.nat());
}

namespace {

Value Curry2(std::function<Value(const Value&, const Value&)> f) {
  return Value::OfFn([f](const Value& a) { return Value::OfFn([f, a](const Value& b) { return f(a, b); }); });
}

Value Curry3(std::function<Value(const Value&, const Value&, const Value&)> f) {
  return Value::OfFn([f](const Value& a) {
    return Value::OfFn([f, a](const Value& b) {
      return Value::OfFn([f, a, b](const Value& c) { return f(a, b, c); });
    });
  });
}

Vec ZeroPoint(const FiniteModel& m) { return Vec::Zero(m.dimension()); }

template <typename F>
const F& Require(const F& hook, const char* what) {
  if (!hook) throw Error(ErrorCode::kNotAvailable, std::string("finite model has no ") + what);
  return hook;
}

Value ConstValue(const Term& t, const FiniteModel& m) {
  switch (t.const_kind()) {
    case ConstKind::kZero: return Value::OfNat(0);
    case ConstKind::kSucc:
      return Value::OfFn([&m](const Value& n) { return Value::OfNat(m.Succ(n.nat())); });
    case ConstKind::kPi: return Curry2([](const Value& a, const Value&) { return a; });
    case ConstKind::kSigma:
      return Curry3([](const Value& x, const Value& y, const Value& z) { return x(z)(y(z)); });
    case ConstKind::kRec:
      return Curry3([](const Value& y, const Value& z, const Value& n) {
        Value acc = y;
        for (Nat i = 0; i < n.nat(); ++i) acc = z(acc)(Value::OfNat(i));
        return acc;
      });
    case ConstKind::kMonus:
      return Curry2([](const Value& a, const Value& b) {
        return Value::OfNat(a.nat() > b.nat() ? a.nat() - b.nat() : 0);
      });
    case ConstKind::kZeroX: return Value::OfPoint(ZeroPoint(m));
    case ConstKind::kOneX: {
      Vec e = ZeroPoint(m);
      e(0) = 1.0;
      return Value::OfPoint(e);
    }
    case ConstKind::kPlusX:
      return Curry2([](const Value& a, const Value& b) { return Value::OfPoint(a.point() + b.point()); });
    case ConstKind::kNegX:
      return Value::OfFn([](const Value& a) { return Value::OfPoint(-a.point()); });
    case ConstKind::kScaleX:
      return Curry2([&m](const Value& r, const Value& x) { return Value::OfPoint(AsReal(r, m) * x.point()); });
    case ConstKind::kNormX:
      return Value::OfFn([](const Value& x) { return Value::OfReal(x.point().norm()); });
    case ConstKind::kInnerX:
      return Curry2([](const Value& a, const Value& b) { return Value::OfReal(a.point().dot(b.point())); });
    case ConstKind::kPlusR:
      return Curry2([&m](const Value& a, const Value& b) { return Value::OfReal(AsReal(a, m) + AsReal(b, m)); });
    case ConstKind::kMulR:
      return Curry2([&m](const Value& a, const Value& b) { return Value::OfReal(AsReal(a, m) * AsReal(b, m)); });
    case ConstKind::kAbsR:
      return Value::OfFn([&m](const Value& a) { return Value::OfReal(std::abs(AsReal(a, m))); });
    case ConstKind::kRecipR:
      return Curry2([&m](const Value& l, const Value& a) {
        double r = AsReal(a, m);
        double guard = std::ldexp(1.0, -static_cast<int>(l.nat()));
        return Value::OfReal(std::abs(r) > guard ? 1.0 / r : 0.0);
      });
    case ConstKind::kNatR:
      return Value::OfFn([](const Value& n) { return Value::OfReal(static_cast<double>(n.nat())); });
    case ConstKind::kChiA: {
      const auto& member = Require(m.membership, "membership hook for chi_A");
      return Curry2([member](const Value& x, const Value& y) {
        return Value::OfNat(member(x.point(), y.point()) ? 0 : 1);
      });
    }
    case ConstKind::kJChi: {
      const auto& resolvent = Require(m.resolvent, "resolvent hook for J");
      return Curry2([resolvent, &m](const Value& g, const Value& x) {
        double gamma = AsReal(g, m);
        if (!(gamma > 0)) return Value::OfPoint(ZeroPoint(m));
        return Value::OfPoint(resolvent(gamma, x.point()));
      });
    }
    case ConstKind::kGammaTilde: return Value::OfReal(m.gamma_tilde);
    case ConstKind::kMGamma: return Value::OfNat(m.m_gamma);
    case ConstKind::kCX: return Value::OfPoint(m.c_x.size() ? m.c_x : ZeroPoint(m));
    case ConstKind::kRhoTilde: return Value::OfReal(m.rho_tilde);
    case ConstKind::kNGamma: return Value::OfNat(m.n_gamma);
    case ConstKind::kACirc: {
      const auto& sel = Require(m.minimal_norm, "minimal-norm hook for A^o");
      return Value::OfFn([sel](const Value& x) { return Value::OfPoint(sel(x.point())); });
    }
    case ConstKind::kVarpi: {
      const auto& w = Require(m.varpi, "modulus hook for varpi");
      return Value::OfFn([w](const Value& k) { return Value::OfNat(w(k.nat())); });
    }
  }
  throw Error(ErrorCode::kUnsupportedType, "constant without finite-model semantics");
}

}  // namespace

Value Evaluate(const Term& t, const FiniteModel& model, const Environment& env) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error(ErrorCode::kUnboundVariable, "variable '" + t.name() + "' is unbound");
      return it->second;
    }
    case Term::Kind::kConst: return ConstValue(t, model);
    case Term::Kind::kApp: {
      Value f = Evaluate(t.fun(), model, env);
      Value a = Evaluate(t.arg(), model, env);
      return f(a);
    }
  }
  return Value::OfNat(0);
}

}  // namespace proofmine
