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

#ifndef PROOFMINE_MAJORIZATION_HPP_
#define PROOFMINE_MAJORIZATION_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "proofmine/model.hpp"
#include "proofmine/operator_checks.hpp"
#include "proofmine/operators.hpp"
#include "proofmine/real_codes.hpp"
#include "proofmine/types.hpp"

namespace proofmine {

/// Supplies random pairs (y*, y) with y* majorizing y at a given type.
/// Majorant-side values are naturals or functions over naturals.
class MajorizationSampler {
 public:
  MajorizationSampler(int dimension, Nat max_nat = 8, double radius = 5.0)
      : dimension_(dimension), max_nat_(max_nat), radius_(radius) {}
  virtual ~MajorizationSampler() = default;

  /// Supports 0, X, 1 = 0(0), and one-argument arrows over {0, X}.
  virtual std::pair<Value, Value> Pair(const FinType& type, std::mt19937_64& rng) const;

 protected:
  int dimension_;
  Nat max_nat_;
  double radius_;
};

/// Precision index at which type-1 arguments are read as reals.
inline constexpr unsigned kRealReadIndex = 20;

struct MajorizationResult {
  bool holds = true;
  std::uint64_t checked = 0;
  /// Smallest margin star - value (or star - ||value||) seen.
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string counterexample;
};

/// Falsification check of star majorizing value at the type: on base types
/// directly, on arrow types via both clauses of the curried majorization
/// lemma on sampled argument tuples.
MajorizationResult CheckMajorizes(const Value& star, const Value& value, const FinType& type,
                                  const MajorizationSampler& sampler, std::size_t samples,
                                  std::uint64_t seed);

/// x^M(y) = max{ x(i) : 0 <= i <= y }, tabulated up to cap.
std::function<Nat(Nat)> MonotoneHull(const std::function<Nat(Nat)>& x, Nat cap);

/// lambda alpha, x*. x* + 2k + (2 + 2^m (alpha(0) + 1)) n.
struct ResolventMajorant {
  Nat n = 0, m = 0, l = 0, k = 0;

  Nat operator()(Nat alpha0, Nat x_star) const;
  /// As a value of type 0(0)(1).
  Value AsValue() const;
  std::string Rule() const;
};

/// lambda x, y. 1
Value ChiMajorant();

/// The model interpretation of J^chi_A as a value of type X(X)(1): the
/// real code is read at kRealReadIndex; returns J_gamma x when gamma > 0 (and
/// the comonotone guard holds), else 0.
Value ResolventValue(OperatorPtr a);
Value ChiValue(OperatorPtr a);

/// Code of a nonnegative rational as a type-1 value; indices above
/// kRealReadIndex are read there so entries fit in 64 bits for r < 2^10.
Value CanonicalCodeValue(const mpq_class& r);

struct MajorantWitnesses {
  Vec c;
  double gamma_tilde = 1.0;
  ResolventMajorant majorant;
};

/// n = ceil ||c - J c||, k = ceil ||c||, m least with gamma~ >= 2^-m,
/// l = ceil gamma~, with c = 0 and gamma~ the first admissible grid value.
MajorantWitnesses ComputeWitnesses(const SetValuedOperator& a);

/// Lemma clauses (a) and (b) for the resolvent majorant against the
/// instance on sampled (gamma, x), gamma in [2^-m, 2^l], plus the tight
/// form with alpha(0) = max(0, ceil gamma - 1). Requires a total resolvent.
/// A supplied majorant must dominate the computed witnesses.
CheckReport VerifyResolventMajorant(OperatorPtr a, const VerifyOptions& options,
                                    const std::optional<ResolventMajorant>& majorant = std::nullopt);
/// True when (n, m, l, k) dominate the witnesses componentwise.
bool ValidWitnesses(const ResolventMajorant& candidate, const MajorantWitnesses& w);
/// lambda x,y.1 against chi_A, half the samples with y in Ax.
CheckReport VerifyChiMajorant(OperatorPtr a, const VerifyOptions& options);
/// For several selections s of A, a majorant of s also majorizes A°.
CheckReport VerifyMinimalNormMajorant(OperatorPtr a, const VerifyOptions& options);

struct BobsMajorant {
  bool bounded = false;
  /// a*(n) for n = 0..values.size()-1 (empty when not bounded).
  std::vector<Nat> values;
  std::string rule;
  /// Largest value norm met while probing.
  double probe_max = 0.0;
};

/// Nondecreasing a* with a*(n) >= sup{ ||u|| : u in Ax, ||x|| <= n } for
/// n = 0..max_radius, from the closed-form bound when the instance has one
/// (cross-checked against probes) and from probes otherwise. NotBounded
/// when a probe exceeds probe_cap or the value sets are unbounded.
BobsMajorant BobsUniformMajorant(const SetValuedOperator& a, Nat max_radius = 8, std::uint64_t seed = 7,
                                 double probe_cap = 1e6);

}  // namespace proofmine

#endif  // PROOFMINE_MAJORIZATION_HPP_
