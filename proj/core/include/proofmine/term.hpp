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

#ifndef PROOFMINE_TERM_HPP_
#define PROOFMINE_TERM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proofmine/types.hpp"

namespace proofmine {

/// Constants of the combinator language. Type parameters (for Pi, Sigma
/// and R) are carried alongside the kind in Term.
enum class ConstKind {
  kZero,      // 0 : 0
  kSucc,      // S : 0(0)
  kPi,        // Pi[r,t] : r(t)(r),          Pi a b  > a
  kSigma,     // Sigma[d,r,t] : t(d)(r(d))(t(r)(d)),  Sigma x y z > x z (y z)
  kRec,       // R[r] : r(0)(r(0)(r))(r),   R y z 0 > y,  R y z (S n) > z (R y z n) n
  kMonus,     // truncated subtraction, 0(0)(0); primitive recursive
  kZeroX,     // 0_X : X
  kOneX,      // 1_X : X
  kPlusX,     // +_X : X(X)(X)
  kNegX,      // -_X : X(X)
  kScaleX,    // ._X : X(X)(1)
  kNormX,     // ||.||_X : 1(X)
  kInnerX,    // <.,.>_X : 1(X)(X), defined from the norm in inner product spaces
  kPlusR,     // +_R : 1(1)(1)
  kMulR,      // ._R : 1(1)(1)
  kAbsR,      // |.|_R : 1(1)
  kRecipR,    // (.)^{-1}_l : 1(1)(0), guarded reciprocal
  kNatR,      // embedding of naturals into reals : 1(0)
  kChiA,      // chi_A : 0(X)(X); chi_A x y = 0 iff y in Ax
  kJChi,      // J^{chi_A} : X(X)(1); resolvent
  kGammaTilde,// gamma~ : 1
  kMGamma,    // m_gamma~ : 0
  kCX,        // c_X : X
  kRhoTilde,  // rho~ : 1
  kNGamma,    // n_gamma~ : 0
  kACirc,     // A^o_X : X(X), minimal norm selection
  kVarpi,     // varpi : 0(0), modulus of uniform continuity
};

class Term {
 public:
  enum class Kind { kVar, kConst, kApp };

  static Term Var(std::string name, FinType type);
  static Term Const(ConstKind kind, std::vector<FinType> params = {});
  static Term App(Term fun, Term arg);

  /// Left-associated application f a1 ... an.
  static Term Apply(Term fun, const std::vector<Term>& args);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }

  // kVar
  const std::string& name() const;
  const FinType& var_type() const;
  // kConst
  ConstKind const_kind() const;
  const std::vector<FinType>& params() const;
  // kApp
  const Term& fun() const;
  const Term& arg() const;

  std::size_t size() const;
  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string ConstName(ConstKind kind);
std::optional<ConstKind> ConstFromName(const std::string& name);
/// Number of type parameters a constant carries (Pi: 2, Sigma: 3, R: 1).
std::size_t ConstArity(ConstKind kind);
FinType ConstType(ConstKind kind, const std::vector<FinType>& params);

/// Variable context used to check that variable occurrences agree with
/// their declarations.
using VarContext = std::map<std::string, FinType>;

/// Returns the unique type of t. Throws IllTypedApplication naming the
/// offending subterm path, or UnboundVariable if ctx is given and a
/// variable is missing or declared with another type.
FinType TypeCheck(const Term& t);
FinType TypeCheck(const Term& t, const VarContext& ctx);

Term Numeral(std::uint64_t n);
std::optional<std::uint64_t> AsNumeral(const Term& t);

/// Decomposes f a1 ... an into (f, [a1..an]) with f not an application.
std::pair<Term, std::vector<Term>> Unspine(const Term& t);

/// Free variables in order of first occurrence.
std::vector<std::pair<std::string, FinType>> FreeVars(const Term& t);
bool OccursFree(const std::string& name, const Term& t);

/// Replaces every occurrence of the variable `name` by s.
Term Substitute(const Term& t, const std::string& name, const Term& s);

/// Identity combinator Sigma Pi Pi at type r(r).
Term Identity(const FinType& r);

/// Combinator bracket abstraction: returns a binder-free u with
/// u s reducing to t[s/x].
Term BracketAbstract(const Term& var, const Term& t);

struct ReduceResult {
  Term term;
  bool normal = false;
  std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// One leftmost-outermost step, or nullopt if t is normal.
std::optional<Term> ReduceStep(const Term& t);

/// Reduces until normal or fuel is spent. Running out of fuel is not an
/// exception: the partial result is returned with normal == false.
ReduceResult Reduce(const Term& t, std::uint64_t fuel = kDefaultFuel);

}  // namespace proofmine

#endif  // PROOFMINE_TERM_HPP_
