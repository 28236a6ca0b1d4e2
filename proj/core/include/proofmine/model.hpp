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

#ifndef PROOFMINE_MODEL_HPP_
#define PROOFMINE_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "proofmine/term.hpp"
#include "proofmine/types.hpp"

namespace proofmine {

using Vec = Eigen::VectorXd;
using Nat = std::uint64_t;

class Value;
using Fn = std::function<Value(const Value&)>;

/// Semantic value in a finite model: a natural, a real (for type-1 objects
/// produced by the space operations), a point of X, or a function.
class Value {
 public:
  Value() : v_(Nat{0}) {}
  static Value OfNat(Nat n) { return Value(n); }
  static Value OfReal(double r) { return Value(Real{r}); }
  static Value OfPoint(Vec p) { return Value(std::move(p)); }
  static Value OfFn(Fn f) { return Value(std::make_shared<const Fn>(std::move(f))); }

  bool is_nat() const { return std::holds_alternative<Nat>(v_); }
  bool is_real() const { return std::holds_alternative<Real>(v_); }
  bool is_point() const { return std::holds_alternative<Vec>(v_); }
  bool is_fn() const { return std::holds_alternative<std::shared_ptr<const Fn>>(v_); }

  Nat nat() const;
  double real() const;
  const Vec& point() const;
  Value operator()(const Value& arg) const;

 private:
  struct Real {
    double value;
  };
  explicit Value(Nat n) : v_(n) {}
  explicit Value(Real r) : v_(r) {}
  explicit Value(Vec p) : v_(std::move(p)) {}
  explicit Value(std::shared_ptr<const Fn> f) : v_(std::move(f)) {}

  std::variant<Nat, Real, Vec, std::shared_ptr<const Fn>> v_;
};

/// Finite classical model: type 0 is {0,...,N} with successor capped at N,
/// function types over 0 are enumerable as tables, X is a finite list of
/// sample vectors. Operator-level constants are supplied as hooks.
struct FiniteModel {
  Nat size = 3;
  std::vector<Vec> x_points;
  /// y in Ax, used for chi_A.
  std::function<bool(const Vec& x, const Vec& y)> membership;
  /// J_gamma x for gamma > 0.
  std::function<Vec(double gamma, const Vec& x)> resolvent;
  std::function<Vec(const Vec& x)> minimal_norm;
  std::function<Nat(Nat)> varpi;
  double gamma_tilde = 1.0;
  Nat m_gamma = 0;
  double rho_tilde = 0.0;
  Nat n_gamma = 0;
  Vec c_x;
  /// Largest number of values any single enumerated type may have.
  std::uint64_t enumeration_budget = 1'000'000;

  Nat Succ(Nat n) const { return n >= size ? size : n + 1; }
  int dimension() const;
};

using Environment = std::map<std::string, Value>;

/// Enumerates every element of a type in the model. Supports 0, X (the
/// sample list) and function types whose arguments are all 0 and whose
/// head is 0 (degree 1). Other types raise UnsupportedType; spaces larger
/// than the model budget raise EnumerationBudgetExceeded.
class TypeSpace {
 public:
  TypeSpace(const FiniteModel& model, const FinType& type);

  std::uint64_t size() const { return size_; }
  Value at(std::uint64_t index) const;
  const FinType& type() const { return type_; }

  /// Number of values of a type, or nullopt when not enumerable.
  static std::optional<std::uint64_t> Count(const FiniteModel& model, const FinType& type);

 private:
  const FiniteModel* model_;
  FinType type_;
  std::size_t arity_ = 0;
  std::uint64_t table_size_ = 0;
  std::uint64_t size_ = 0;
};

/// Value of a table-encoded degree-1 function: digits of index in base
/// N+1, one per argument tuple (first argument most significant).
Value TableFunction(const FiniteModel& model, std::size_t arity, std::vector<Nat> table);

/// Denotational evaluation. Free variables must be bound in env.
Value Evaluate(const Term& t, const FiniteModel& model, const Environment& env = {});

/// Reads a type-1 argument as a real number: real values directly, functions
/// as rational-code sequences decoded at a fixed precision index.
double AsReal(const Value& v, const FiniteModel& model);

}  // namespace proofmine

#endif  // PROOFMINE_MODEL_HPP_
