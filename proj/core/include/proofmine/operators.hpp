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

#ifndef PROOFMINE_OPERATORS_HPP_
#define PROOFMINE_OPERATORS_HPP_

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "proofmine/model.hpp"

namespace proofmine {

using Mat = Eigen::MatrixXd;

enum class NormKind { kL1, kL2, kLinf };
double Norm(const Vec& v, NormKind kind = NormKind::kL2);
std::string NormKindName(NormKind kind);
NormKind ParseNormKind(const std::string& text);

/// Closed box prod [lo_i, hi_i] with possibly infinite bounds; the value
/// sets of every catalog instance have this shape.
struct BoxSet {
  bool empty = true;
  Vec lo;
  Vec hi;

  static BoxSet Empty() { return {}; }
  static BoxSet Point(const Vec& p) { return {false, p, p}; }
  static BoxSet Box(Vec lo, Vec hi) { return {false, std::move(lo), std::move(hi)}; }

  bool bounded() const;
  bool Contains(const Vec& u, double tol) const;
  /// Euclidean projection, i.e. componentwise clamp.
  Vec Project(const Vec& p) const;
  double Distance(const Vec& p) const;
  /// Largest Euclidean norm of an element; infinity when unbounded.
  double MaxNorm() const;
  /// Uniform sample, with infinite sides cut at +-radius.
  Vec Sample(std::mt19937_64& rng, double radius) const;
  /// Corner points (up to 2^d), with infinite sides cut at +-radius.
  std::vector<Vec> Vertices(double radius) const;
};

enum class OperatorClass { kMonotone, kAccretive, kComonotone };

struct ClassSpec {
  OperatorClass kind = OperatorClass::kMonotone;
  double rho = 0.0;
  NormKind norm = NormKind::kL2;
};
std::string ClassSpecName(const ClassSpec& spec);

/// A set-valued operator on R^d given intensionally.
class SetValuedOperator {
 public:
  virtual ~SetValuedOperator() = default;

  virtual std::string name() const = 0;
  virtual int dimension() const = 0;
  virtual ClassSpec declared_class() const { return {}; }
  /// Bounded on bounded sets.
  virtual bool majorizable() const { return true; }
  /// J_gamma defined on all of R^d for every admissible gamma.
  virtual bool total_resolvent() const { return true; }
  virtual std::optional<Vec> known_zero() const { return std::nullopt; }

  virtual bool InDomain(const Vec& x) const { return !Values(x).empty; }
  /// Ax; empty outside the domain.
  virtual BoxSet Values(const Vec& x) const = 0;
  bool Contains(const Vec& x, const Vec& u, double tol) const { return Values(x).Contains(u, tol); }
  /// Projection of 0 onto Ax.
  virtual std::optional<Vec> MinimalNorm(const Vec& x) const;
  virtual std::optional<Vec> Selection(const Vec& x) const { return MinimalNorm(x); }
  virtual std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const;
  /// Lipschitz constant for single-valued instances, enabling the iterative
  /// resolvent when gamma * L < 1.
  virtual std::optional<double> LipschitzConstant() const { return std::nullopt; }
  /// sup{ ||u|| : u in Ax, ||x|| <= n } when known in closed form.
  virtual std::optional<double> SelectionNormBound(double n) const;
  /// Extra points worth probing when bounding values on a ball.
  virtual std::vector<Vec> ProbePoints(double radius) const;
  virtual Vec SampleDomain(std::mt19937_64& rng, double radius) const;
};

using OperatorPtr = std::shared_ptr<const SetValuedOperator>;

/// A = M x.
class LinearOperator final : public SetValuedOperator {
 public:
  LinearOperator(std::string name, Mat m, ClassSpec spec);
  std::string name() const override { return name_; }
  int dimension() const override { return static_cast<int>(m_.rows()); }
  ClassSpec declared_class() const override { return spec_; }
  std::optional<Vec> known_zero() const override { return Vec::Zero(dimension()); }
  BoxSet Values(const Vec& x) const override { return BoxSet::Point(m_ * x); }
  std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const override;
  std::optional<double> LipschitzConstant() const override { return op_norm_; }
  std::optional<double> SelectionNormBound(double n) const override { return op_norm_ * n; }
  const Mat& matrix() const { return m_; }
  double operator_norm() const { return op_norm_; }

 private:
  std::string name_;
  Mat m_;
  ClassSpec spec_;
  double op_norm_;
};

/// Subdifferential of the l1 norm; on R this is the subdifferential of |.|.
class AbsSubdifferential final : public SetValuedOperator {
 public:
  explicit AbsSubdifferential(int dim = 1) : dim_(dim) {}
  std::string name() const override { return "abs_subdiff"; }
  int dimension() const override { return dim_; }
  std::optional<Vec> known_zero() const override { return Vec::Zero(dim_); }
  BoxSet Values(const Vec& x) const override;
  std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const override;
  std::optional<double> SelectionNormBound(double) const override { return std::sqrt(double(dim_)); }
  std::vector<Vec> ProbePoints(double radius) const override;
  Vec SampleDomain(std::mt19937_64& rng, double radius) const override;

 private:
  int dim_;
};

/// Normal cone of the box [lo, hi]^d, the subdifferential of its indicator.
class BoxNormalCone final : public SetValuedOperator {
 public:
  BoxNormalCone(int dim, double lo, double hi) : dim_(dim), lo_(lo), hi_(hi) {}
  std::string name() const override { return "box_normal_cone"; }
  int dimension() const override { return dim_; }
  bool majorizable() const override { return false; }
  std::optional<Vec> known_zero() const override { return Vec::Constant(dim_, 0.5 * (lo_ + hi_)); }
  BoxSet Values(const Vec& x) const override;
  std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const override;
  std::optional<double> SelectionNormBound(double) const override;
  std::vector<Vec> ProbePoints(double radius) const override;
  Vec SampleDomain(std::mt19937_64& rng, double radius) const override;

 private:
  int dim_;
  double lo_;
  double hi_;
};

/// Derivative of tan on (0, pi/2): monotone, unbounded near pi/2, so not
/// majorizable. The resolvent solves p + gamma / cos^2 p = x by bisection.
class TanSubgradient final : public SetValuedOperator {
 public:
  std::string name() const override { return "tan_subgradient"; }
  int dimension() const override { return 1; }
  bool majorizable() const override { return false; }
  bool total_resolvent() const override { return false; }
  BoxSet Values(const Vec& x) const override;
  std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const override;
  std::optional<double> SelectionNormBound(double) const override { return std::nullopt; }
  std::vector<Vec> ProbePoints(double radius) const override;
  Vec SampleDomain(std::mt19937_64& rng, double radius) const override;
};

/// Componentwise arctan: single-valued, monotone, 1-Lipschitz. The
/// resolvent is found coordinatewise by bisection.
class ArctanOperator final : public SetValuedOperator {
 public:
  explicit ArctanOperator(int dim = 1) : dim_(dim) {}
  std::string name() const override { return "arctan"; }
  int dimension() const override { return dim_; }
  std::optional<Vec> known_zero() const override { return Vec::Zero(dim_); }
  BoxSet Values(const Vec& x) const override;
  std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const override;
  std::optional<double> LipschitzConstant() const override { return 1.0; }
  std::optional<double> SelectionNormBound(double) const override;

 private:
  int dim_;
};

/// lambda * A for lambda > 0.
class ScaledOperator final : public SetValuedOperator {
 public:
  ScaledOperator(OperatorPtr base, double lambda);
  std::string name() const override;
  int dimension() const override { return base_->dimension(); }
  ClassSpec declared_class() const override;
  bool majorizable() const override { return base_->majorizable(); }
  bool total_resolvent() const override { return base_->total_resolvent(); }
  std::optional<Vec> known_zero() const override { return base_->known_zero(); }
  BoxSet Values(const Vec& x) const override;
  std::optional<Vec> ClosedFormResolvent(double gamma, const Vec& x) const override;
  std::optional<double> LipschitzConstant() const override;
  std::optional<double> SelectionNormBound(double n) const override;
  std::vector<Vec> ProbePoints(double radius) const override { return base_->ProbePoints(radius); }
  Vec SampleDomain(std::mt19937_64& rng, double radius) const override {
    return base_->SampleDomain(rng, radius);
  }

 private:
  OperatorPtr base_;
  double lambda_;
};

/// Catalog names: identity, psd_skew, abs_subdiff (alias soft_threshold),
/// box_normal_cone, neg_half_identity, two_identity, zero, tan_subgradient,
/// arctan.
std::vector<std::string> CatalogNames();
OperatorPtr MakeInstance(const std::string& name, std::uint64_t seed = 0);

struct ResolventOptions {
  double residual_target = 1e-10;
  std::uint64_t max_iterations = 100'000;
};

/// J_gamma x = (I + gamma A)^{-1} x. Closed form where available, otherwise
/// damped fixed-point iteration for Lipschitz single-valued instances with
/// gamma L < 1. Comonotone instances refuse gamma with rho <= -gamma/2.
Vec Resolvent(const SetValuedOperator& a, double gamma, const Vec& x, const ResolventOptions& options = {});
bool ResolventAvailable(const SetValuedOperator& a, double gamma);
/// (x - J_gamma x) / gamma.
Vec Yosida(const SetValuedOperator& a, double gamma, const Vec& x);

/// L x / max(||x||, L).
Vec ClampTilde(const Vec& x, double l);

}  // namespace proofmine

#endif  // PROOFMINE_OPERATORS_HPP_
