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

#ifndef PROOFMINE_ALGORITHMS_HPP_
#define PROOFMINE_ALGORITHMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "proofmine/operators.hpp"

namespace proofmine {

/// Positive parameter sequence given by a closed-form rule.
struct ParamSequence {
  enum class Rule { kConstant, kHarmonic, kGeometric };
  Rule rule = Rule::kConstant;
  double scale = 1.0;
  double ratio = 0.5;

  double at(std::size_t n) const;
  /// Least alpha with at(n) > 2^-alpha.
  unsigned modulus(std::size_t n) const;
  std::string str() const;

  /// const:c, harmonic:c (c/(n+1)), geometric:c:q (c q^n).
  static ParamSequence Parse(const std::string& text);
};

struct IterationStep {
  std::size_t n = 0;
  Vec x;
  double gamma = 0.0;
  double lambda = 0.0;
  /// ||x_{n+1} - x_n||
  double residual = 0.0;
  /// ||x_n - x_{n+1}|| / gamma_n, the Yosida norm at x_n for the proximal
  /// point method.
  double yosida_norm = 0.0;
  /// Distance of the implied resolvent value from the graph.
  double membership_defect = 0.0;
  std::optional<double> distance;
};

struct IterationTrace {
  std::string algorithm;
  std::string instance;
  std::vector<IterationStep> steps;
  Vec final_point;
  std::optional<double> final_distance;
  std::optional<Vec> zero;
  /// ok, diverged or outside_domain.
  std::string status = "ok";
  std::string message;
};

constexpr double kDivergenceBound = 1e12;

/// x_{n+1} = J^A_{gamma_n} x_n.
IterationTrace ProximalPoint(const SetValuedOperator& a, const Vec& x0, const ParamSequence& gamma,
                             std::size_t steps, const std::optional<Vec>& zero = std::nullopt);

/// x_{n+1} = J^S_{mu_n}(x_n + mu_n T_{lambda_n} x_n) with T_lambda the
/// Yosida approximate of T.
IterationTrace MoudafiIteration(const SetValuedOperator& t, const SetValuedOperator& s, const Vec& x0,
                                const ParamSequence& mu, const ParamSequence& lambda, std::size_t steps,
                                const std::optional<Vec>& zero = std::nullopt);

struct TraceSummary {
  std::size_t steps = 0;
  double min_residual = 0.0;
  double max_residual = 0.0;
  double final_residual = 0.0;
  double residual_square_sum = 0.0;
  /// Last ratio residual_{n+1} / residual_n with a nonzero denominator.
  std::optional<double> residual_ratio;
  std::optional<bool> fejer;
  double fejer_worst_slack = 0.0;
  double worst_membership_defect = 0.0;
  std::string status;

  friend bool operator==(const TraceSummary&, const TraceSummary&) = default;
};

TraceSummary SummarizeTrace(const IterationTrace& trace, double fejer_tol = 1e-10);
/// First n with 0 in A x_n, if any.
std::optional<std::size_t> ZeroReachedAt(const SetValuedOperator& a, const IterationTrace& trace,
                                         double tol = 1e-12);

nlohmann::ordered_json TraceToJson(const IterationTrace& trace);
IterationTrace TraceFromJson(const nlohmann::ordered_json& j);
nlohmann::ordered_json SummaryToJson(const TraceSummary& s);
TraceSummary SummaryFromJson(const nlohmann::ordered_json& j);
std::string TraceToCsv(const IterationTrace& trace);

}  // namespace proofmine

#endif  // PROOFMINE_ALGORITHMS_HPP_
