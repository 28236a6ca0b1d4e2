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

#include "proofmine/operator_checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "proofmine/error.hpp"
#include "proofmine/parallel.hpp"

namespace proofmine {

namespace {

std::string Show(const Vec& v) {
  std::ostringstream out;
  out.precision(6);
  out << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::string Show(double t) {
  std::ostringstream out;
  out.precision(6);
  out << t;
  return out.str();
}

bool Recoverable(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kOutsideDomain:
    case ErrorCode::kNotAvailable:
    case ErrorCode::kPartialResolventGuard:
    case ErrorCode::kNoConvergence: return true;
    default: return false;
  }
}

/// Named accumulators for one pass over the samples, merged by chunk.
class Accumulators {
 public:
  explicit Accumulators(const std::vector<std::string>& names) {
    for (const auto& n : names) {
      CheckResult r;
      r.name = n;
      results_.push_back(std::move(r));
    }
  }
  CheckResult& operator[](std::size_t i) { return results_[i]; }
  void Merge(const Accumulators& other) {
    for (std::size_t i = 0; i < results_.size(); ++i) results_[i].Merge(other.results_[i]);
  }
  std::vector<CheckResult> Take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

template <typename Body>
std::vector<CheckResult> RunSamples(std::size_t n, unsigned jobs, const std::vector<std::string>& names,
                                    Body&& body) {
  const unsigned chunks = std::max(1u, jobs);
  std::vector<Accumulators> parts(chunks, Accumulators(names));
  ParallelChunks(n, jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t i = begin; i < end; ++i) body(i, parts[chunk]);
  });
  Accumulators total(names);
  for (const auto& p : parts) total.Merge(p);
  return total.Take();
}

Vec SampleValue(const SetValuedOperator& a, const Vec& x, std::mt19937_64& rng, double radius) {
  BoxSet v = a.Values(x);
  if (v.empty) throw Error(ErrorCode::kOutsideDomain, "sampled point outside dom A");
  // Mix in the extreme points so boundary behaviour is exercised.
  if (std::bernoulli_distribution(0.3)(rng)) {
    std::vector<Vec> corners = v.Vertices(radius);
    return corners[std::uniform_int_distribution<std::size_t>(0, corners.size() - 1)(rng)];
  }
  return v.Sample(rng, radius);
}

}  // namespace

void CheckResult::Record(std::uint64_t index, double slack, double scale, double tol,
                         const std::function<std::string()>& describe) {
  ++evaluated;
  const double normalized = slack / std::max(1.0, scale);
  if (normalized < -tol) ++violations;
  if (normalized < worst_slack || (normalized == worst_slack && index < worst_index)) {
    worst_slack = normalized;
    worst_index = index;
    counterexample = normalized < -tol ? describe() : std::string();
  }
}

void CheckResult::Merge(const CheckResult& other) {
  const bool was_empty = evaluated == 0;
  evaluated += other.evaluated;
  skipped += other.skipped;
  violations += other.violations;
  if (other.evaluated == 0) return;
  if (was_empty || other.worst_slack < worst_slack ||
      (other.worst_slack == worst_slack && other.worst_index < worst_index)) {
    worst_slack = other.worst_slack;
    worst_index = other.worst_index;
    counterexample = other.counterexample;
  }
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* CheckReport::Find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double CheckReport::WorstSlack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& c : checks) worst = std::min(worst, c.worst_slack);
  return worst;
}

double ConicalAlpha(double rho, double gamma) { return 1.0 / (2.0 * (rho / gamma + 1.0)); }

std::vector<double> EffectiveGammaGrid(const SetValuedOperator& a, const std::vector<double>& grid) {
  std::vector<double> out;
  for (double g : grid)
    if (ResolventAvailable(a, g)) out.push_back(g);
  ClassSpec spec = a.declared_class();
  if (out.empty() && spec.kind == OperatorClass::kComonotone && spec.rho < 0) {
    double g = 1.0;
    while (!(spec.rho > -g / 2)) g *= 2;
    out.push_back(g);
  }
  return out;
}

CheckResult CheckOperatorClass(const SetValuedOperator& a, const ClassSpec& spec, const VerifyOptions& options) {
  struct Sample {
    Vec x, u, y, v;
  };
  std::mt19937_64 rng(options.seed);
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample s;
    s.x = a.SampleDomain(rng, options.radius);
    s.u = SampleValue(a, s.x, rng, options.radius);
    s.y = std::bernoulli_distribution(0.1)(rng) ? s.x : a.SampleDomain(rng, options.radius);
    s.v = SampleValue(a, s.y, rng, options.radius);
    samples.push_back(std::move(s));
  }
  const std::string name = ClassSpecName(spec);
  auto results = RunSamples(samples.size(), options.jobs, {name}, [&](std::size_t i, Accumulators& acc) {
    const Sample& s = samples[i];
    const Vec dx = s.x - s.y, du = s.u - s.v;
    double slack = 0, scale = dx.squaredNorm() + du.squaredNorm();
    switch (spec.kind) {
      case OperatorClass::kMonotone: slack = dx.dot(du); break;
      case OperatorClass::kComonotone: slack = dx.dot(du) - spec.rho * du.squaredNorm(); break;
      case OperatorClass::kAccretive: {
        slack = std::numeric_limits<double>::infinity();
        for (double l : options.lambda_grid)
          slack = std::min(slack, Norm(dx + l * du, spec.norm) - Norm(dx, spec.norm));
        scale = Norm(dx, spec.norm) + Norm(du, spec.norm);
        break;
      }
    }
    acc[0].Record(i, slack, scale, options.tolerance, [&] {
      return "x=" + Show(s.x) + " u=" + Show(s.u) + " y=" + Show(s.y) + " v=" + Show(s.v);
    });
  });
  return results[0];
}

CheckReport CheckResolventProperties(const SetValuedOperator& a, const VerifyOptions& options) {
  const std::vector<double> grid = EffectiveGammaGrid(a, options.gamma_grid);
  CheckReport report{a.name() + " resolvent", options.tolerance, {}};
  if (grid.empty()) return report;
  const ClassSpec spec = a.declared_class();
  const double rho = spec.kind == OperatorClass::kComonotone ? spec.rho : 0.0;
  const bool firm = rho >= 0;

  struct Sample {
    Vec x, y, z, w;
    double gamma, lambda;
  };
  std::mt19937_64 rng(options.seed);
  std::vector<Sample> samples;
  const std::size_t g = grid.size();
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample s;
    s.x = a.SetValuedOperator::SampleDomain(rng, options.radius);
    s.y = std::bernoulli_distribution(0.1)(rng) ? s.x : a.SetValuedOperator::SampleDomain(rng, options.radius);
    s.z = a.SampleDomain(rng, options.radius);
    s.w = SampleValue(a, s.z, rng, options.radius);
    s.gamma = grid[i % g];
    s.lambda = grid[(i / g) % g];
    samples.push_back(std::move(s));
  }

  enum {
    kDefining, kFirmInner, kFirmNorm, kNonexpansive, kConical, kAveraged, kIdentity, kDisplacement,
    kUniqueness, kYosidaLipschitz, kYosidaBound, kCount
  };
  const std::vector<std::string> names = {
      "defining_relation", "firm_ne_inner", "firm_ne_norm", "nonexpansive", "alpha_conical", "alpha_averaged",
      "resolvent_identity", "displacement_bound", "uniqueness", "yosida_lipschitz", "yosida_bound"};
  auto results = RunSamples(samples.size(), options.jobs, names, [&](std::size_t i, Accumulators& acc) {
    const Sample& s = samples[i];
    const double gamma = s.gamma, lambda = s.lambda, tol = options.tolerance;
    Vec jx, jy, jlx;
    try {
      jx = Resolvent(a, gamma, s.x);
      jy = Resolvent(a, gamma, s.y);
      jlx = Resolvent(a, lambda, s.x);
    } catch (const Error& e) {
      if (!Recoverable(e)) throw;
      for (int c = 0; c < kCount; ++c) acc[c].Skip();
      return;
    }
    auto where = [&] {
      return "gamma=" + Show(gamma) + " lambda=" + Show(lambda) + " x=" + Show(s.x) + " y=" + Show(s.y);
    };
    const Vec dx = s.x - s.y, dj = jx - jy;
    const double scale = dx.squaredNorm() + 1.0;

    acc[kDefining].Record(i, -a.Values(jx).Distance((s.x - jx) / gamma), s.x.norm() / gamma, tol, where);
    if (firm) {
      acc[kFirmInner].Record(i, dx.dot(dj) - dj.squaredNorm(), scale, tol, where);
      double worst = std::numeric_limits<double>::infinity();
      for (double r : options.r_grid) worst = std::min(worst, (r * dx + (1 - r) * dj).norm() - dj.norm());
      acc[kFirmNorm].Record(i, worst, dx.norm() + 1.0, tol, where);
    } else {
      acc[kFirmInner].Skip();
      acc[kFirmNorm].Skip();
    }
    acc[kNonexpansive].Record(i, dx.norm() - dj.norm(), dx.norm() + 1.0, tol, where);

    // T = J_gamma is alpha-conical iff N = (1 - 1/alpha) I + T/alpha is
    // nonexpansive, iff ||Tx-Ty||^2 <= ||x-y||^2 - (1-alpha)/alpha ||(I-T)x-(I-T)y||^2.
    const double alpha = ConicalAlpha(rho, gamma);
    const Vec dn = (1 - 1 / alpha) * dx + dj / alpha;
    acc[kConical].Record(i, dx.norm() - dn.norm(), dx.norm() + 1.0, tol, where);
    const Vec dres = dx - dj;
    acc[kAveraged].Record(i, dx.squaredNorm() - (1 - alpha) / alpha * dres.squaredNorm() - dj.squaredNorm(),
                          scale, tol, where);

    try {
      const Vec shifted = (gamma / lambda) * s.x + (1 - gamma / lambda) * jlx;
      const Vec rhs = Resolvent(a, gamma, shifted);
      acc[kIdentity].Record(i, -(jlx - rhs).norm(), s.x.norm() + 1.0, tol, where);
    } catch (const Error& e) {
      if (!Recoverable(e)) throw;
      acc[kIdentity].Skip();
    }
    acc[kDisplacement].Record(i, (2 + gamma / lambda) * (s.x - jlx).norm() - (s.x - jx).norm(),
                              s.x.norm() + 1.0, tol, where);

    try {
      const Vec jz = Resolvent(a, gamma, s.z + gamma * s.w);
      acc[kUniqueness].Record(i, -(jz - s.z).norm(), s.z.norm() + gamma * s.w.norm() + 1.0, tol, [&] {
        return "gamma=" + Show(gamma) + " z=" + Show(s.z) + " w=" + Show(s.w);
      });
      const Vec yz = (s.z - Resolvent(a, gamma, s.z)) / gamma;
      acc[kYosidaBound].Record(i, s.w.norm() - yz.norm(), s.w.norm() + 1.0, tol, [&] {
        return "gamma=" + Show(gamma) + " x=" + Show(s.z) + " y=" + Show(s.w);
      });
    } catch (const Error& e) {
      if (!Recoverable(e)) throw;
      acc[kUniqueness].Skip();
      acc[kYosidaBound].Skip();
    }
    const Vec ax = (s.x - jx) / gamma, ay = (s.y - jy) / gamma;
    acc[kYosidaLipschitz].Record(i, (2 / gamma) * dx.norm() - (ax - ay).norm(), dx.norm() / gamma + 1.0, tol,
                                 where);
  });
  report.checks = std::move(results);
  return report;
}

unsigned ResolventParamModulus(double b, unsigned l_prime, unsigned k) {
  if (!(b > 0)) throw Error(ErrorCode::kPreconditionViolated, "b must be positive");
  const double log_b = std::max(0.0, std::log2(b));
  return static_cast<unsigned>(std::floor(double(k) + double(l_prime) + log_b));
}

CheckResult VerifyResolventParamModulus(const SetValuedOperator& a, double b, unsigned l_prime, unsigned k,
                                        const VerifyOptions& options) {
  const unsigned j = ResolventParamModulus(b, l_prime, k);
  const double step = std::ldexp(1.0, -static_cast<int>(j));
  const double bound = std::ldexp(1.0, -static_cast<int>(k));
  struct Sample {
    Vec x;
    double gamma_prime, gamma;
  };
  std::mt19937_64 rng(options.seed);
  std::vector<Sample> samples;
  const double gamma_floor = std::ldexp(1.0, -static_cast<int>(l_prime));
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample s;
    s.gamma_prime = gamma_floor * std::uniform_real_distribution<double>(1.0, 4.0)(rng);
    if (i % 5 == 0) s.gamma_prime = gamma_floor;
    s.x = a.SetValuedOperator::SampleDomain(rng, options.radius);
    double offset = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    if (i % 7 == 0) offset = i % 2 ? 1.0 : -1.0;
    s.gamma = s.gamma_prime + offset * step;
    samples.push_back(std::move(s));
  }
  auto results = RunSamples(samples.size(), options.jobs, {"param_modulus"}, [&](std::size_t i, Accumulators& acc) {
    Sample s = samples[i];
    if (!(s.gamma > 0) || !ResolventAvailable(a, s.gamma) || !ResolventAvailable(a, s.gamma_prime)) {
      acc[0].Skip();
      return;
    }
    try {
      // Shrink x until the displacement premise ||x - J_gamma' x|| <= b holds.
      Vec jp = Resolvent(a, s.gamma_prime, s.x);
      for (int it = 0; it < 60 && (s.x - jp).norm() > b; ++it) {
        s.x *= 0.999 * b / (s.x - jp).norm();
        jp = Resolvent(a, s.gamma_prime, s.x);
      }
      if ((s.x - jp).norm() > b) {
        acc[0].Skip();
        return;
      }
      const Vec jg = Resolvent(a, s.gamma, s.x);
      acc[0].Record(i, bound - (jg - jp).norm(), 1.0, 1e-12, [&] {
        return "x=" + Show(s.x) + " gamma'=" + Show(s.gamma_prime) + " gamma=" + Show(s.gamma) +
               " j=" + std::to_string(j);
      });
    } catch (const Error& e) {
      if (!Recoverable(e)) throw;
      acc[0].Skip();
    }
  });
  return results[0];
}

Vec MinimalNormSelection(const SetValuedOperator& a, const Vec& x) {
  auto m = a.MinimalNorm(x);
  if (!m) throw Error(ErrorCode::kOutsideDomain, a.name() + ": x is outside dom A");
  return *m;
}

CheckReport CheckMinimalNorm(const SetValuedOperator& a, const VerifyOptions& options) {
  struct Sample {
    Vec x, y;
  };
  std::mt19937_64 rng(options.seed);
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample s;
    s.x = a.SampleDomain(rng, options.radius);
    s.y = SampleValue(a, s.x, rng, options.radius);
    samples.push_back(std::move(s));
  }
  CheckReport report{a.name() + " minimal norm", options.tolerance, {}};
  report.checks = RunSamples(samples.size(), options.jobs, {"Y1_membership", "Y2_variational", "minimality",
                                                            "quantitative_uniqueness"},
                             [&](std::size_t i, Accumulators& acc) {
                               const Sample& s = samples[i];
                               const Vec m = MinimalNormSelection(a, s.x);
                               auto where = [&] { return "x=" + Show(s.x) + " y=" + Show(s.y); };
                               const double scale = s.y.squaredNorm() + 1.0;
                               acc[0].Record(i, -a.Values(s.x).Distance(m), 1.0, options.tolerance, where);
                               acc[1].Record(i, (s.y - m).dot(m), scale, options.tolerance, where);
                               acc[2].Record(i, s.y.norm() - m.norm(), scale, options.tolerance, where);
                               acc[3].Record(i, s.y.squaredNorm() - m.squaredNorm() - (s.y - m).squaredNorm(),
                                             scale, options.tolerance, where);
                             });
  return report;
}

bool HStar(const std::vector<Vec>& p, const std::vector<Vec>& q, double eps) {
  for (const Vec& a : p) {
    bool found = false;
    for (const Vec& b : q)
      if ((a - b).norm() <= eps) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

double HStarExcess(const BoxSet& p, const BoxSet& q) {
  if (p.empty) return 0.0;
  if (q.empty) return std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < p.lo.size(); ++i) {
    if (!std::isfinite(p.lo[i]) && std::isfinite(q.lo[i])) return std::numeric_limits<double>::infinity();
    if (!std::isfinite(p.hi[i]) && std::isfinite(q.hi[i])) return std::numeric_limits<double>::infinity();
  }
  // dist(., Q) is convex, so its supremum over a box sits at a vertex.
  double worst = 0.0;
  for (const Vec& v : p.Vertices(1e6)) worst = std::max(worst, q.Distance(v));
  return worst;
}

bool HStar(const BoxSet& p, const BoxSet& q, double eps) { return HStarExcess(p, q) <= eps; }

CheckResult UcModulusCheck(const SetValuedOperator& a, const std::function<Nat(Nat)>& varpi,
                           const std::vector<Nat>& k_grid, const VerifyOptions& options) {
  struct Sample {
    Vec x, y;
    Nat k;
  };
  std::mt19937_64 rng(options.seed);
  std::vector<Sample> samples;
  std::normal_distribution<double> g;
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample s;
    s.k = k_grid[i % k_grid.size()];
    s.x = a.SampleDomain(rng, options.radius);
    Vec dir(s.x.size());
    for (Eigen::Index c = 0; c < dir.size(); ++c) dir[c] = g(rng);
    dir /= std::max(dir.norm(), 1e-300);
    const double reach = 1.0 / (double(varpi(s.k)) + 1.0);
    s.y = s.x + std::uniform_real_distribution<double>(0.0, 0.999)(rng) * reach * dir;
    samples.push_back(std::move(s));
  }
  auto results = RunSamples(samples.size(), options.jobs, {"uc_modulus"}, [&](std::size_t i, Accumulators& acc) {
    const Sample& s = samples[i];
    if (!a.InDomain(s.x) || !a.InDomain(s.y)) {
      acc[0].Skip();
      return;
    }
    const double eps = 1.0 / (double(s.k) + 1.0);
    acc[0].Record(i, eps - HStarExcess(a.Values(s.x), a.Values(s.y)), 1.0, options.tolerance, [&] {
      return "k=" + std::to_string(s.k) + " x=" + Show(s.x) + " y=" + Show(s.y);
    });
  });
  return results[0];
}

CheckReport RangeConditionCheck(const SetValuedOperator& a, const std::vector<double>& gammas,
                                const std::vector<unsigned>& alphas, double l, const Vec& center,
                                const VerifyOptions& options) {
  if (gammas.size() != alphas.size())
    throw Error(ErrorCode::kPreconditionViolated, "one positivity modulus per parameter is required");
  for (std::size_t n = 0; n < gammas.size(); ++n)
    if (!(gammas[n] > std::ldexp(1.0, -static_cast<int>(alphas[n]))))
      throw Error(ErrorCode::kPreconditionViolated, "gamma_n > 2^-alpha_n fails at n=" + std::to_string(n));
  const bool center_is_zero = a.Contains(center, Vec::Zero(center.size()), options.tolerance);
  std::mt19937_64 rng(options.seed);
  std::vector<Vec> points;
  for (std::size_t i = 0; i < options.samples; ++i) {
    Vec x = a.SampleDomain(rng, l + center.norm());
    if ((x - center).norm() > l) {
      Vec y = center + ClampTilde(x - center, l);
      x = a.InDomain(y) ? y : center;
    }
    points.push_back(x);
  }
  CheckReport report{a.name() + " range condition", options.tolerance, {}};
  report.checks = RunSamples(points.size(), options.jobs, {"range", "membership", "z_ball", "w_bound"},
                             [&](std::size_t i, Accumulators& acc) {
                               const Vec& x = points[i];
                               if (!a.InDomain(x)) {
                                 for (int c = 0; c < 4; ++c) acc[c].Skip();
                                 return;
                               }
                               for (std::size_t n = 0; n < gammas.size(); ++n) {
                                 auto where = [&] { return "n=" + std::to_string(n) + " x=" + Show(x); };
                                 Vec z;
                                 try {
                                   z = Resolvent(a, gammas[n], x);
                                 } catch (const Error& e) {
                                   if (!Recoverable(e)) throw;
                                   acc[0].Record(i, -1.0, 1.0, options.tolerance, where);
                                   continue;
                                 }
                                 acc[0].Record(i, 0.0, 1.0, options.tolerance, where);
                                 const Vec w = (x - z) / gammas[n];
                                 acc[1].Record(i, -a.Values(z).Distance(w), x.norm() + 1.0, options.tolerance,
                                               where);
                                 if (center_is_zero) {
                                   acc[2].Record(i, l - (z - center).norm(), l, options.tolerance, where);
                                   acc[3].Record(i, l * std::ldexp(1.0, int(alphas[n]) + 1) - w.norm(), l,
                                                 options.tolerance, where);
                                 } else {
                                   acc[2].Skip();
                                   acc[3].Skip();
                                 }
                               }
                             });
  return report;
}

CheckReport VerifyInstance(const SetValuedOperator& a, const VerifyOptions& options) {
  CheckReport report{a.name(), options.tolerance, {}};
  CheckResult cls = CheckOperatorClass(a, a.declared_class(), options);
  cls.name = "class_" + cls.name;
  report.checks.push_back(cls);
  for (auto& c : CheckResolventProperties(a, options).checks) report.checks.push_back(c);
  for (auto& c : CheckMinimalNorm(a, options).checks) report.checks.push_back(c);
  return report;
}

}  // namespace proofmine
