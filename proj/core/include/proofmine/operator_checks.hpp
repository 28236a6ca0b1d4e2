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

#ifndef PROOFMINE_OPERATOR_CHECKS_HPP_
#define PROOFMINE_OPERATOR_CHECKS_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "proofmine/operators.hpp"

namespace proofmine {

/// Worst slack of one inequality over a sample set. Slack is the amount by
/// which the inequality holds, divided by max(1, scale of the inputs).
struct CheckResult {
  std::string name;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::uint64_t worst_index = 0;
  std::string counterexample;

  bool passed() const { return violations == 0; }
  void Record(std::uint64_t index, double slack, double scale, double tol,
              const std::function<std::string()>& describe);
  void Skip() { ++skipped; }
  /// Associative, order-independent merge.
  void Merge(const CheckResult& other);
};

struct CheckReport {
  std::string subject;
  double tolerance = 1e-8;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* Find(const std::string& name) const;
  double WorstSlack() const;
};

struct VerifyOptions {
  std::size_t samples = 1000;
  std::vector<double> gamma_grid{0.25, 0.5, 1.0, 2.0, 4.0};
  std::vector<double> r_grid{0.25, 0.5, 1.0, 2.0, 4.0};
  std::vector<double> lambda_grid{0.25, 0.5, 1.0, 2.0, 4.0};
  double tolerance = 1e-8;
  double radius = 5.0;
  std::uint64_t seed = 7;
  unsigned jobs = 1;
};

/// Averagedness constant 1 / (2 (rho/gamma + 1)) of the resolvent of a
/// rho-comonotone operator.
double ConicalAlpha(double rho, double gamma);

/// The grid restricted to gammas where the resolvent exists. For
/// comonotone instances with negative rho whose restriction is empty, the
/// first power of two above -2 rho is added.
std::vector<double> EffectiveGammaGrid(const SetValuedOperator& a, const std::vector<double>& grid);

/// Defining inequality of the class on sampled graph pairs.
CheckResult CheckOperatorClass(const SetValuedOperator& a, const ClassSpec& spec, const VerifyOptions& options);

/// Firm nonexpansiveness (inner-product and norm forms), nonexpansiveness,
/// alpha-conical and alpha-averaged forms, resolvent identity, displacement
/// bound, uniqueness of resolvent values, defining relation, Yosida
/// Lipschitz constant and norm bound.
CheckReport CheckResolventProperties(const SetValuedOperator& a, const VerifyOptions& options);

/// j = floor(k + l' + log2 b), with log2 b clamped at 0 for b < 1.
unsigned ResolventParamModulus(double b, unsigned l_prime, unsigned k);
/// Samples x, gamma' >= 2^-l' with ||x - J_gamma' x|| <= b and gamma with
/// |gamma - gamma'| <= 2^-j, and checks ||J_gamma x - J_gamma' x|| <= 2^-k.
CheckResult VerifyResolventParamModulus(const SetValuedOperator& a, double b, unsigned l_prime, unsigned k,
                                        const VerifyOptions& options);

/// A°x, the projection of 0 onto Ax.
Vec MinimalNormSelection(const SetValuedOperator& a, const Vec& x);
/// (Y1) membership, (Y2) variational inequality, minimality and the
/// quantitative uniqueness ||y||^2 >= ||A°x||^2 + ||y - A°x||^2.
CheckReport CheckMinimalNorm(const SetValuedOperator& a, const VerifyOptions& options);

/// H*[P, Q, eps]: every p in P has some q in Q with ||p - q|| <= eps.
bool HStar(const std::vector<Vec>& p, const std::vector<Vec>& q, double eps);
/// sup over p in P of dist(p, Q), for boxes.
double HStarExcess(const BoxSet& p, const BoxSet& q);
bool HStar(const BoxSet& p, const BoxSet& q, double eps);
/// ||x - y|| < 1/(varpi(k)+1) implies H*[Ax, Ay, 1/(k+1)] on sampled pairs.
CheckResult UcModulusCheck(const SetValuedOperator& a, const std::function<Nat(Nat)>& varpi,
                           const std::vector<Nat>& k_grid, const VerifyOptions& options);

/// For x in dom A within distance L of a and each n, z = J_{gamma_n} x and
/// w = (x - z)/gamma_n satisfy w in Az; when a is a zero of A also
/// ||z - a|| <= L and ||w|| <= L 2^(alpha_n + 1).
CheckReport RangeConditionCheck(const SetValuedOperator& a, const std::vector<double>& gammas,
                                const std::vector<unsigned>& alphas, double l, const Vec& center,
                                const VerifyOptions& options);

/// Every catalog check suitable for the instance.
CheckReport VerifyInstance(const SetValuedOperator& a, const VerifyOptions& options);

}  // namespace proofmine

#endif  // PROOFMINE_OPERATOR_CHECKS_HPP_
