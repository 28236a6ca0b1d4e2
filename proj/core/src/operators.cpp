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

#include "proofmine/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "proofmine/error.hpp"

namespace proofmine {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Treats |t| below this as exactly zero when deciding which face of a
/// value set applies.
constexpr double kFaceTolerance = 1e-12;

}  // namespace

double Norm(const Vec& v, NormKind kind) {
  switch (kind) {
    case NormKind::kL1: return v.lpNorm<1>();
    case NormKind::kL2: return v.norm();
    case NormKind::kLinf: return v.size() ? v.lpNorm<Eigen::Infinity>() : 0.0;
  }
  return v.norm();
}

std::string NormKindName(NormKind kind) {
  switch (kind) {
    case NormKind::kL1: return "l1";
    case NormKind::kL2: return "l2";
    case NormKind::kLinf: return "linf";
  }
  return "?";
}

NormKind ParseNormKind(const std::string& text) {
  if (text == "l1" || text == "1") return NormKind::kL1;
  if (text == "l2" || text == "2") return NormKind::kL2;
  if (text == "linf" || text == "inf") return NormKind::kLinf;
  throw Error(ErrorCode::kParseError, "unknown norm '" + text + "'");
}

bool BoxSet::bounded() const { return empty || (lo.allFinite() && hi.allFinite()); }

bool BoxSet::Contains(const Vec& u, double tol) const {
  if (empty) return false;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (u[i] < lo[i] - tol || u[i] > hi[i] + tol) return false;
  return true;
}

Vec BoxSet::Project(const Vec& p) const {
  if (empty) throw Error(ErrorCode::kOutsideDomain, "projection onto an empty set");
  return p.cwiseMax(lo).cwiseMin(hi);
}

double BoxSet::Distance(const Vec& p) const {
  if (empty) return kInf;
  return (p - Project(p)).norm();
}

double BoxSet::MaxNorm() const {
  if (empty) return 0.0;
  if (!bounded()) return kInf;
  return lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm();
}

Vec BoxSet::Sample(std::mt19937_64& rng, double radius) const {
  if (empty) throw Error(ErrorCode::kOutsideDomain, "sampling from an empty set");
  Vec out(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    const double a = std::isfinite(lo[i]) ? lo[i] : (std::isfinite(hi[i]) ? hi[i] - radius : -radius);
    const double b = std::isfinite(hi[i]) ? hi[i] : (std::isfinite(lo[i]) ? lo[i] + radius : radius);
    out[i] = a == b ? a : std::uniform_real_distribution<double>(a, b)(rng);
  }
  return out;
}

std::vector<Vec> BoxSet::Vertices(double radius) const {
  std::vector<Vec> out;
  if (empty) return out;
  const Eigen::Index d = lo.size();
  Vec a = lo, b = hi;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!std::isfinite(a[i])) a[i] = std::min(-radius, b[i]);
    if (!std::isfinite(b[i])) b[i] = std::max(radius, a[i]);
  }
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Vec v(d);
    for (Eigen::Index i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? b[i] : a[i];
    out.push_back(v);
  }
  return out;
}

std::string ClassSpecName(const ClassSpec& spec) {
  switch (spec.kind) {
    case OperatorClass::kMonotone: return "monotone";
    case OperatorClass::kAccretive: return "accretive(" + NormKindName(spec.norm) + ")";
    case OperatorClass::kComonotone: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "comonotone(rho=%g)", spec.rho);
      return buf;
    }
  }
  return "?";
}

std::optional<Vec> SetValuedOperator::MinimalNorm(const Vec& x) const {
  BoxSet v = Values(x);
  if (v.empty) return std::nullopt;
  return v.Project(Vec::Zero(x.size()));
}

std::optional<Vec> SetValuedOperator::ClosedFormResolvent(double, const Vec&) const { return std::nullopt; }

std::optional<double> SetValuedOperator::SelectionNormBound(double) const { return std::nullopt; }

std::vector<Vec> SetValuedOperator::ProbePoints(double radius) const {
  std::vector<Vec> out;
  const int d = dimension();
  out.push_back(Vec::Zero(d));
  for (int i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e[i] = radius;
    out.push_back(e);
    out.push_back(-e);
  }
  out.push_back(Vec::Constant(d, radius / std::sqrt(double(d))));
  return out;
}

Vec SetValuedOperator::SampleDomain(std::mt19937_64& rng, double radius) const {
  std::uniform_real_distribution<double> u(-radius, radius);
  Vec x(dimension());
  for (int i = 0; i < x.size(); ++i) x[i] = u(rng);
  return x;
}

LinearOperator::LinearOperator(std::string name, Mat m, ClassSpec spec)
    : name_(std::move(name)), m_(std::move(m)), spec_(spec) {
  op_norm_ = m_.size() ? Eigen::JacobiSVD<Mat>(m_).singularValues()(0) : 0.0;
}

std::optional<Vec> LinearOperator::ClosedFormResolvent(double gamma, const Vec& x) const {
  Mat system = Mat::Identity(m_.rows(), m_.cols()) + gamma * m_;
  Eigen::FullPivLU<Mat> lu(system);
  if (!lu.isInvertible()) throw Error(ErrorCode::kOutsideDomain, name_ + ": I + gamma A is singular");
  return Vec(lu.solve(x));
}

BoxSet AbsSubdifferential::Values(const Vec& x) const {
  Vec lo(x.size()), hi(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) <= kFaceTolerance) {
      lo[i] = -1;
      hi[i] = 1;
    } else {
      lo[i] = hi[i] = x[i] > 0 ? 1 : -1;
    }
  }
  return BoxSet::Box(lo, hi);
}

std::optional<Vec> AbsSubdifferential::ClosedFormResolvent(double gamma, const Vec& x) const {
  Vec p(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double m = std::abs(x[i]) - gamma;
    p[i] = m > 0 ? std::copysign(m, x[i]) : 0.0;
  }
  return p;
}

std::vector<Vec> AbsSubdifferential::ProbePoints(double radius) const {
  std::vector<Vec> out = SetValuedOperator::ProbePoints(radius);
  out.push_back(Vec::Zero(dim_));
  return out;
}

Vec AbsSubdifferential::SampleDomain(std::mt19937_64& rng, double radius) const {
  Vec x = SetValuedOperator::SampleDomain(rng, radius);
  std::bernoulli_distribution on_kink(0.25);
  for (int i = 0; i < dim_; ++i)
    if (on_kink(rng)) x[i] = 0.0;
  return x;
}

BoxSet BoxNormalCone::Values(const Vec& x) const {
  Vec lo(x.size()), hi(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] < lo_ - kFaceTolerance || x[i] > hi_ + kFaceTolerance) return BoxSet::Empty();
    const bool at_lo = std::abs(x[i] - lo_) <= kFaceTolerance;
    const bool at_hi = std::abs(x[i] - hi_) <= kFaceTolerance;
    lo[i] = at_lo ? -kInf : 0.0;
    hi[i] = at_hi ? kInf : 0.0;
  }
  return BoxSet::Box(lo, hi);
}

std::optional<Vec> BoxNormalCone::ClosedFormResolvent(double, const Vec& x) const {
  return Vec(x.cwiseMax(lo_).cwiseMin(hi_));
}

std::optional<double> BoxNormalCone::SelectionNormBound(double) const { return kInf; }

std::vector<Vec> BoxNormalCone::ProbePoints(double radius) const {
  std::vector<Vec> out;
  Vec corner = Vec::Constant(dim_, hi_);
  if (corner.norm() <= radius) out.push_back(corner);
  out.push_back(Vec::Constant(dim_, 0.5 * (lo_ + hi_)));
  return out;
}

Vec BoxNormalCone::SampleDomain(std::mt19937_64& rng, double) const {
  std::uniform_real_distribution<double> u(lo_, hi_);
  std::uniform_int_distribution<int> face(0, 3);
  Vec x(dim_);
  for (int i = 0; i < dim_; ++i) {
    switch (face(rng)) {
      case 0: x[i] = lo_; break;
      case 1: x[i] = hi_; break;
      default: x[i] = u(rng); break;
    }
  }
  return x;
}

BoxSet TanSubgradient::Values(const Vec& x) const {
  const double t = x[0];
  if (!(t > 0.0 && t < std::numbers::pi / 2)) return BoxSet::Empty();
  const double c = std::cos(t);
  return BoxSet::Point(Vec::Constant(1, 1.0 / (c * c)));
}

std::optional<Vec> TanSubgradient::ClosedFormResolvent(double gamma, const Vec& x) const {
  // g(p) = p + gamma / cos^2 p increases from gamma to infinity on (0, pi/2).
  const double target = x[0];
  if (!(target > gamma))
    throw Error(ErrorCode::kOutsideDomain, "tan_subgradient: J_gamma x needs x > gamma");
  auto g = [&](double p) {
    const double c = std::cos(p);
    return p + gamma / (c * c);
  };
  double a = 0.0, b = std::numbers::pi / 2;
  for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
    const double mid = 0.5 * (a + b);
    (g(mid) < target ? a : b) = mid;
  }
  return Vec::Constant(1, 0.5 * (a + b));
}

std::vector<Vec> TanSubgradient::ProbePoints(double radius) const {
  std::vector<Vec> out;
  for (int k = 1; k <= 12; ++k) {
    const double t = std::numbers::pi / 2 - std::pow(10.0, -k);
    if (t <= radius) out.push_back(Vec::Constant(1, t));
  }
  return out;
}

Vec TanSubgradient::SampleDomain(std::mt19937_64& rng, double radius) const {
  const double hi = std::min(radius, std::numbers::pi / 2 - 1e-3);
  return Vec::Constant(1, std::uniform_real_distribution<double>(1e-3, std::max(hi, 2e-3))(rng));
}

BoxSet ArctanOperator::Values(const Vec& x) const {
  return BoxSet::Point(x.unaryExpr([](double t) { return std::atan(t); }));
}

std::optional<Vec> ArctanOperator::ClosedFormResolvent(double gamma, const Vec& x) const {
  // Each coordinate solves p + gamma atan p = x_i; the root lies between 0 and x_i.
  Vec p(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double a = std::min(0.0, x[i]), b = std::max(0.0, x[i]);
    for (int it = 0; it < 200 && b - a > 0; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      (mid + gamma * std::atan(mid) < x[i] ? a : b) = mid;
    }
    p[i] = 0.5 * (a + b);
  }
  return p;
}

std::optional<double> ArctanOperator::SelectionNormBound(double n) const {
  return std::min(n, std::numbers::pi / 2 * std::sqrt(double(dim_)));
}

ScaledOperator::ScaledOperator(OperatorPtr base, double lambda) : base_(std::move(base)), lambda_(lambda) {
  if (!(lambda > 0)) throw Error(ErrorCode::kPreconditionViolated, "scaling factor must be positive");
}

std::string ScaledOperator::name() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g*", lambda_);
  return buf + base_->name();
}

ClassSpec ScaledOperator::declared_class() const {
  ClassSpec spec = base_->declared_class();
  spec.rho /= lambda_;
  return spec;
}

BoxSet ScaledOperator::Values(const Vec& x) const {
  BoxSet v = base_->Values(x);
  if (v.empty) return v;
  return BoxSet::Box(lambda_ * v.lo, lambda_ * v.hi);
}

std::optional<Vec> ScaledOperator::ClosedFormResolvent(double gamma, const Vec& x) const {
  return base_->ClosedFormResolvent(lambda_ * gamma, x);
}

std::optional<double> ScaledOperator::LipschitzConstant() const {
  auto l = base_->LipschitzConstant();
  if (!l) return l;
  return lambda_ * *l;
}

std::optional<double> ScaledOperator::SelectionNormBound(double n) const {
  auto b = base_->SelectionNormBound(n);
  if (!b) return b;
  return lambda_ * *b;
}

std::vector<std::string> CatalogNames() {
  return {"identity",     "psd_skew", "abs_subdiff",     "box_normal_cone", "neg_half_identity",
          "two_identity", "zero",     "tan_subgradient", "arctan"};
}

OperatorPtr MakeInstance(const std::string& name, std::uint64_t seed) {
  if (name == "identity") return std::make_shared<LinearOperator>("identity", Mat::Identity(2, 2), ClassSpec{});
  if (name == "two_identity")
    return std::make_shared<LinearOperator>("two_identity", 2.0 * Mat::Identity(2, 2), ClassSpec{});
  if (name == "zero") return std::make_shared<LinearOperator>("zero", Mat::Zero(2, 2), ClassSpec{});
  if (name == "neg_half_identity")
    return std::make_shared<LinearOperator>("neg_half_identity", -0.5 * Mat::Identity(2, 2),
                                            ClassSpec{OperatorClass::kComonotone, -2.0, NormKind::kL2});
  if (name == "psd_skew") {
    std::mt19937_64 rng(seed);
    const int d = std::uniform_int_distribution<int>(2, 8)(rng);
    std::normal_distribution<double> g;
    Mat b(d, d), c(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        b(i, j) = g(rng);
        c(i, j) = g(rng);
      }
    Mat m = b.transpose() * b / d + 0.5 * (c - c.transpose());
    return std::make_shared<LinearOperator>("psd_skew", m, ClassSpec{});
  }
  if (name == "abs_subdiff" || name == "soft_threshold") return std::make_shared<AbsSubdifferential>(1);
  if (name == "box_normal_cone") return std::make_shared<BoxNormalCone>(2, -1.0, 1.0);
  if (name == "tan_subgradient") return std::make_shared<TanSubgradient>();
  if (name == "arctan") return std::make_shared<ArctanOperator>(1);
  throw Error(ErrorCode::kParseError, "unknown operator instance '" + name + "'");
}

bool ResolventAvailable(const SetValuedOperator& a, double gamma) {
  if (!(gamma > 0)) return false;
  ClassSpec spec = a.declared_class();
  if (spec.kind == OperatorClass::kComonotone && !(spec.rho > -gamma / 2)) return false;
  return true;
}

Vec Resolvent(const SetValuedOperator& a, double gamma, const Vec& x, const ResolventOptions& options) {
  if (!(gamma > 0)) throw Error(ErrorCode::kNonPositiveGamma, "resolvent parameter must be positive");
  ClassSpec spec = a.declared_class();
  if (spec.kind == OperatorClass::kComonotone && !(spec.rho > -gamma / 2))
    throw Error(ErrorCode::kPartialResolventGuard, a.name() + ": resolvent needs rho > -gamma/2");
  if (auto p = a.ClosedFormResolvent(gamma, x)) return *p;

  auto lipschitz = a.LipschitzConstant();
  const bool monotone = spec.kind != OperatorClass::kComonotone || spec.rho >= 0;
  if (!lipschitz || !(gamma * *lipschitz < 1 || monotone))
    throw Error(ErrorCode::kNotAvailable, a.name() + ": no closed form and no contraction certificate");
  // p -> (1-t) p + t (x - gamma A p) contracts for monotone A at t = 1/(1+(gamma L)^2).
  const double gl = gamma * *lipschitz;
  const double t = gl < 1 ? 0.5 : 1.0 / (1.0 + gl * gl);
  auto select = [&](const Vec& p) {
    auto u = a.Selection(p);
    if (!u) throw Error(ErrorCode::kOutsideDomain, a.name() + ": iterate left the domain");
    return *u;
  };
  Vec p = x;
  for (std::uint64_t it = 0; it < options.max_iterations; ++it) {
    Vec target = x - gamma * select(p);
    if ((p - target).norm() <= options.residual_target) return p;
    p = (1 - t) * p + t * target;
  }
  const double residual = (p - (x - gamma * select(p))).norm();
  throw Error(ErrorCode::kNoConvergence, a.name() + ": resolvent residual " + std::to_string(residual));
}

Vec Yosida(const SetValuedOperator& a, double gamma, const Vec& x) {
  return (x - Resolvent(a, gamma, x)) / gamma;
}

Vec ClampTilde(const Vec& x, double l) {
  if (!(l > 0)) throw Error(ErrorCode::kPreconditionViolated, "clamp radius must be positive");
  return l * x / std::max(x.norm(), l);
}

}  // namespace proofmine
