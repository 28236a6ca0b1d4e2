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

#include "proofmine/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "proofmine/error.hpp"

namespace proofmine {

namespace {

std::string Show(const Value& v) {
  std::ostringstream out;
  out.precision(6);
  if (v.is_nat()) {
    out << v.nat();
  } else if (v.is_real()) {
    out << v.real();
  } else if (v.is_point()) {
    out << "(";
    for (Eigen::Index i = 0; i < v.point().size(); ++i) out << (i ? "," : "") << v.point()[i];
    out << ")";
  } else {
    out << "<fn>";
  }
  return out.str();
}

Nat CeilNat(double t) {
  if (!(t > 0)) return 0;
  // Absorb rounding noise such as 2.0000000000000004.
  return static_cast<Nat>(std::ceil(t - 1e-9));
}

/// Margin star - value at a base type (0 or X).
double BaseMargin(const Value& star, const Value& value, const FinType& head) {
  const double s = static_cast<double>(star.nat());
  if (head.is_x()) return s - value.point().norm();
  return s - static_cast<double>(value.nat());
}

Vec RandomPoint(std::mt19937_64& rng, int d, double radius) {
  std::normal_distribution<double> g;
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = g(rng);
  if (std::bernoulli_distribution(0.1)(rng)) return Vec::Zero(d);
  const double r = radius * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return v * (r / std::max(v.norm(), 1e-300));
}

}  // namespace

std::pair<Value, Value> MajorizationSampler::Pair(const FinType& type, std::mt19937_64& rng) const {
  std::uniform_int_distribution<Nat> slack(0, 2);
  std::uniform_int_distribution<Nat> nat(0, max_nat_);
  if (type.is_zero()) {
    const Nat y = nat(rng);
    return {Value::OfNat(y + slack(rng)), Value::OfNat(y)};
  }
  if (type.is_x()) {
    Vec y = RandomPoint(rng, dimension_, radius_);
    return {Value::OfNat(CeilNat(y.norm()) + slack(rng)), Value::OfPoint(y)};
  }
  const FinType& res = type.result();
  const FinType& arg = type.argument();
  if (res.is_arrow() || arg.is_arrow())
    throw Error(ErrorCode::kUnsupportedType, "no sampler for arguments of type " + type.str());
  const Nat s = slack(rng);
  const Nat cap = max_nat_;
  if (res.is_zero() && arg.is_zero()) {
    std::vector<Nat> table(cap + 1);
    for (auto& t : table) t = nat(rng);
    std::vector<Nat> hull(table);
    for (std::size_t i = 1; i < hull.size(); ++i) hull[i] = std::max(hull[i], hull[i - 1]);
    return {Value::OfFn([hull, s, cap](const Value& i) { return Value::OfNat(hull[std::min(i.nat(), cap)] + s); }),
            Value::OfFn([table, cap](const Value& i) { return Value::OfNat(table[std::min(i.nat(), cap)]); })};
  }
  if (res.is_x() && arg.is_x()) {
    std::normal_distribution<double> g;
    Mat m(dimension_, dimension_);
    for (int i = 0; i < dimension_; ++i)
      for (int j = 0; j < dimension_; ++j) m(i, j) = g(rng) / std::sqrt(double(dimension_));
    const double norm = Eigen::JacobiSVD<Mat>(m).singularValues()(0);
    return {Value::OfFn([norm, s](const Value& n) { return Value::OfNat(CeilNat(norm * double(n.nat())) + s); }),
            Value::OfFn([m](const Value& x) { return Value::OfPoint(m * x.point()); })};
  }
  if (res.is_zero() && arg.is_x()) {
    const double c = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    return {Value::OfFn([c, s](const Value& n) { return Value::OfNat(Nat(std::floor(c * double(n.nat()))) + s); }),
            Value::OfFn([c](const Value& x) { return Value::OfNat(Nat(std::floor(c * x.point().norm()))); })};
  }
  Vec v = RandomPoint(rng, dimension_, radius_);
  const Nat bound = CeilNat(v.norm()) + s;
  return {Value::OfFn([bound](const Value&) { return Value::OfNat(bound); }),
          Value::OfFn([v, cap](const Value& i) {
            return Value::OfPoint(v * (double(std::min(i.nat(), cap)) + 1) / (double(cap) + 1));
          })};
}

MajorizationResult CheckMajorizes(const Value& star, const Value& value, const FinType& type,
                                  const MajorizationSampler& sampler, std::size_t samples, std::uint64_t seed) {
  MajorizationResult result;
  auto record = [&](double margin, const std::function<std::string()>& describe) {
    ++result.checked;
    if (margin < result.worst_margin) result.worst_margin = margin;
    if (margin < 0 && result.holds) {
      result.holds = false;
      result.counterexample = describe();
    }
  };
  const FinType& head = type.head();
  if (!type.is_arrow()) {
    record(BaseMargin(star, value, head), [&] { return Show(star) + " vs " + Show(value); });
    return result;
  }
  const std::vector<FinType> args = type.arguments();
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    // (a) y*_i majorizes y_i at xi_i  =>  x* y* majorizes x y at the head.
    Value lhs = star, rhs = value;
    std::string trace;
    for (const FinType& a : args) {
      auto [ys, y] = sampler.Pair(a, rng);
      lhs = lhs(ys);
      rhs = rhs(y);
      trace += " (" + Show(ys) + "," + Show(y) + ")";
    }
    record(BaseMargin(lhs, rhs, head), [&] { return "clause (a) args" + trace; });
    // (b) y*_i majorizes y_i at hat xi_i  =>  x* y* >= x* y.
    lhs = star;
    rhs = star;
    trace.clear();
    for (const FinType& a : args) {
      auto [ys, y] = sampler.Pair(Hat(a), rng);
      lhs = lhs(ys);
      rhs = rhs(y);
      trace += " (" + Show(ys) + "," + Show(y) + ")";
    }
    record(BaseMargin(lhs, rhs, FinType::Zero()), [&] { return "clause (b) args" + trace; });
  }
  return result;
}

std::function<Nat(Nat)> MonotoneHull(const std::function<Nat(Nat)>& x, Nat cap) {
  std::vector<Nat> table(cap + 1);
  for (Nat i = 0; i <= cap; ++i) table[i] = i ? std::max(table[i - 1], x(i)) : x(0);
  return [table, x, cap](Nat y) {
    if (y <= cap) return table[y];
    Nat best = table[cap];
    for (Nat i = cap + 1; i <= y; ++i) best = std::max(best, x(i));
    return best;
  };
}

Nat ResolventMajorant::operator()(Nat alpha0, Nat x_star) const {
  return x_star + 2 * k + (2 + (Nat{1} << m) * (alpha0 + 1)) * n;
}

Value ResolventMajorant::AsValue() const {
  const ResolventMajorant self = *this;
  return Value::OfFn([self](const Value& alpha) {
    const Nat a0 = alpha(Value::OfNat(0)).nat();
    return Value::OfFn([self, a0](const Value& x) { return Value::OfNat(self(a0, x.nat())); });
  });
}

std::string ResolventMajorant::Rule() const {
  std::ostringstream out;
  out << "lambda alpha,x*. x* + " << 2 * k << " + (2 + " << (Nat{1} << m) << "*(alpha(0)+1))*" << n;
  return out.str();
}

Value ChiMajorant() {
  return Value::OfFn([](const Value&) { return Value::OfFn([](const Value&) { return Value::OfNat(1); }); });
}

Value ResolventValue(OperatorPtr a) {
  return Value::OfFn([a](const Value& alpha) {
    const double gamma = RatValueDouble(alpha(Value::OfNat(kRealReadIndex)).nat());
    return Value::OfFn([a, gamma](const Value& x) {
      if (!(gamma > 0) || !ResolventAvailable(*a, gamma)) return Value::OfPoint(Vec::Zero(x.point().size()));
      return Value::OfPoint(Resolvent(*a, gamma, x.point()));
    });
  });
}

Value ChiValue(OperatorPtr a) {
  return Value::OfFn([a](const Value& x) {
    return Value::OfFn([a, x](const Value& y) { return Value::OfNat(a->Contains(x.point(), y.point(), 1e-12) ? 0 : 1); });
  });
}

Value CanonicalCodeValue(const mpq_class& r) {
  std::vector<Nat> codes;
  for (unsigned i = 0; i <= kRealReadIndex; ++i) {
    mpz_class c = CanonicalRepAt(r, i).code;
    if (!c.fits_ulong_p()) throw Error(ErrorCode::kUnsupportedType, "code exceeds 64 bits");
    codes.push_back(c.get_ui());
  }
  return Value::OfFn([codes](const Value& i) { return Value::OfNat(codes[std::min<Nat>(i.nat(), kRealReadIndex)]); });
}

MajorantWitnesses ComputeWitnesses(const SetValuedOperator& a) {
  MajorantWitnesses w;
  w.c = Vec::Zero(a.dimension());
  const std::vector<double> grid = EffectiveGammaGrid(a, {1.0});
  if (grid.empty()) throw Error(ErrorCode::kPreconditionViolated, a.name() + ": no admissible gamma~");
  w.gamma_tilde = grid.front();
  const Vec jc = Resolvent(a, w.gamma_tilde, w.c);
  w.majorant.n = CeilNat((w.c - jc).norm());
  w.majorant.k = CeilNat(w.c.norm());
  while (std::ldexp(1.0, -static_cast<int>(w.majorant.m)) > w.gamma_tilde) ++w.majorant.m;
  w.majorant.l = CeilNat(w.gamma_tilde);
  return w;
}

namespace {

/// Real arguments come as canonical codes of dyadic rationals; the majorant
/// side is the code itself, which is nondecreasing and so its own hull.
class ResolventSampler final : public MajorizationSampler {
 public:
  ResolventSampler(int dimension, double radius, const ResolventMajorant& maj)
      : MajorizationSampler(dimension, 8, radius), maj_(maj) {}

  std::pair<Value, Value> Pair(const FinType& type, std::mt19937_64& rng) const override {
    if (type == TypeOne()) {
      const mpq_class gamma = SampleGamma(rng);
      Value code = CanonicalCodeValue(gamma);
      return {code, code};
    }
    return MajorizationSampler::Pair(type, rng);
  }

  mpq_class SampleGamma(std::mt19937_64& rng) const {
    const long lo = 1024L >> std::min<Nat>(maj_.m, 10);
    const long hi = 1024L << std::min<Nat>(maj_.l, 20);
    if (std::bernoulli_distribution(0.05)(rng)) return mpq_class(0);
    mpq_class g(std::uniform_int_distribution<long>(std::max(lo, 1L), hi)(rng), 1024);
    g.canonicalize();
    return g;
  }

 private:
  ResolventMajorant maj_;
};

CheckResult FromMajorization(const std::string& name, const MajorizationResult& r) {
  CheckResult c;
  c.name = name;
  c.evaluated = r.checked;
  c.violations = r.holds ? 0 : 1;
  c.worst_slack = r.worst_margin;
  c.counterexample = r.counterexample;
  return c;
}

}  // namespace

bool ValidWitnesses(const ResolventMajorant& candidate, const MajorantWitnesses& w) {
  return candidate.n >= w.majorant.n && candidate.m >= w.majorant.m && candidate.l >= w.majorant.l &&
         candidate.k >= w.majorant.k;
}

CheckReport VerifyResolventMajorant(OperatorPtr a, const VerifyOptions& options,
                                    const std::optional<ResolventMajorant>& majorant) {
  if (!a->total_resolvent())
    throw Error(ErrorCode::kPreconditionViolated, a->name() + ": the resolvent majorant needs a total resolvent");
  CheckReport report{a->name() + " resolvent majorant", options.tolerance, {}};
  MajorantWitnesses w = ComputeWitnesses(*a);
  if (majorant) {
    if (!ValidWitnesses(*majorant, w))
      throw Error(ErrorCode::kPreconditionViolated, a->name() + ": (n,m,l,k) do not dominate the witnesses");
    w.majorant = *majorant;
  }
  const FinType j_type = ParseType("X(X)(1)");
  ResolventSampler sampler(a->dimension(), options.radius, w.majorant);
  report.checks.push_back(FromMajorization(
      "lemma_clauses", CheckMajorizes(w.majorant.AsValue(), ResolventValue(a), j_type, sampler, options.samples,
                                      options.seed)));

  CheckResult tight;
  tight.name = "tight_bound";
  CheckResult chain;
  chain.name = "proof_chain";
  std::mt19937_64 rng(options.seed + 1);
  const Vec jc = Resolvent(*a, w.gamma_tilde, w.c);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const double gamma = sampler.SampleGamma(rng).get_d();
    const Vec x = a->SetValuedOperator::SampleDomain(rng, options.radius);
    const bool defined = gamma > 0 && ResolventAvailable(*a, gamma);
    const Vec jx = defined ? Resolvent(*a, gamma, x) : Vec::Zero(x.size());
    const Nat alpha0 = gamma > 1 ? Nat(std::ceil(gamma)) - 1 : 0;
    const double bound = double(w.majorant(alpha0, CeilNat(x.norm())));
    auto where = [&] {
      std::ostringstream out;
      out << "gamma=" << gamma << " |x|=" << x.norm() << " |Jx|=" << jx.norm();
      return out.str();
    };
    tight.Record(i, bound - jx.norm(), 1.0, options.tolerance, where);
    if (defined) {
      const double rhs = x.norm() + 2 * w.c.norm() + (2 + gamma / w.gamma_tilde) * (w.c - jc).norm();
      chain.Record(i, rhs - jx.norm(), rhs, options.tolerance, where);
    } else {
      chain.Skip();
    }
  }
  report.checks.push_back(tight);
  report.checks.push_back(chain);
  return report;
}

CheckReport VerifyChiMajorant(OperatorPtr a, const VerifyOptions& options) {
  CheckReport report{a->name() + " chi majorant", options.tolerance, {}};
  const Value star = ChiMajorant();
  const Value chi = ChiValue(a);
  CheckResult member, outside;
  member.name = "member_pairs";
  outside.name = "nonmember_pairs";
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Vec x = a->SampleDomain(rng, options.radius);
    Vec y = RandomPoint(rng, a->dimension(), options.radius);
    if (i % 2 == 0) {
      BoxSet v = a->Values(x);
      if (!v.empty) y = v.Sample(rng, options.radius);
    }
    const Nat xs = CeilNat(x.norm()), ys = CeilNat(y.norm());
    const Nat lhs = star(Value::OfNat(xs))(Value::OfNat(ys)).nat();
    const Nat rhs = chi(Value::OfPoint(x))(Value::OfPoint(y)).nat();
    (rhs == 0 ? member : outside).Record(i, double(lhs) - double(rhs), 1.0, 0.0, [&] { return std::string("chi"); });
  }
  report.checks.push_back(member);
  report.checks.push_back(outside);
  return report;
}

CheckReport VerifyMinimalNormMajorant(OperatorPtr a, const VerifyOptions& options) {
  CheckReport report{a->name() + " minimal-norm majorant", options.tolerance, {}};
  if (!a->majorizable() || !a->SelectionNormBound(1.0) || !std::isfinite(*a->SelectionNormBound(1.0)))
    throw Error(ErrorCode::kPreconditionViolated, a->name() + " has no finite selection bound");
  using Selection = std::function<Vec(const Vec&)>;
  const std::vector<std::pair<std::string, Selection>> selections = {
      {"minimal_norm", [&](const Vec& x) { return MinimalNormSelection(*a, x); }},
      {"max_vertex",
       [&](const Vec& x) {
         auto vs = a->Values(x).Vertices(1e6);
         return *std::max_element(vs.begin(), vs.end(),
                                  [](const Vec& p, const Vec& q) { return p.norm() < q.norm(); });
       }},
      {"sign_vertex", [&](const Vec& x) {
         BoxSet v = a->Values(x);
         Vec out(x.size());
         for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = x[i] >= 0 ? v.hi[i] : v.lo[i];
         return out;
       }}};
  // Every selection gets the majorant lambda n. ceil(sup over the n-ball).
  auto g = [&](Nat n) { return CeilNat(*a->SelectionNormBound(double(n))); };
  for (const auto& [name, sel] : selections) {
    CheckResult premise, clause_a, clause_b;
    premise.name = name + "_majorant_premise";
    clause_a.name = name + "_majorant_dominates_min_norm";
    clause_b.name = name + "_majorant_monotone";
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) {
      const Vec x = a->SampleDomain(rng, options.radius);
      const Nat xs = CeilNat(x.norm()) + std::uniform_int_distribution<Nat>(0, 2)(rng);
      const Nat y = std::uniform_int_distribution<Nat>(0, xs)(rng);
      auto where = [&] {
        std::ostringstream out;
        out << "x*=" << xs << " |x|=" << x.norm();
        return out.str();
      };
      premise.Record(i, double(g(xs)) - sel(x).norm(), 1.0, options.tolerance, where);
      clause_a.Record(i, double(g(xs)) - MinimalNormSelection(*a, x).norm(), 1.0, options.tolerance, where);
      clause_b.Record(i, double(g(xs)) - double(g(y)), 1.0, 0.0, where);
    }
    report.checks.push_back(premise);
    report.checks.push_back(clause_a);
    report.checks.push_back(clause_b);
  }
  return report;
}

BobsMajorant BobsUniformMajorant(const SetValuedOperator& a, Nat max_radius, std::uint64_t seed,
                                 double probe_cap) {
  BobsMajorant out;
  std::mt19937_64 rng(seed);
  std::vector<double> bounds;
  bool closed_form = true;
  for (Nat n = 0; n <= max_radius; ++n) {
    const double r = double(n);
    std::vector<Vec> probes = a.ProbePoints(r);
    for (int s = 0; s < 64; ++s) probes.push_back(a.SampleDomain(rng, std::max(r, 1e-9)));
    double probe_max = 0.0;
    for (const Vec& x : probes) {
      if (x.norm() > r + 1e-12 || !a.InDomain(x)) continue;
      probe_max = std::max(probe_max, a.Values(x).MaxNorm());
    }
    out.probe_max = std::max(out.probe_max, probe_max);
    auto closed = a.SelectionNormBound(r);
    if (!std::isfinite(probe_max) || probe_max > probe_cap || (closed && !std::isfinite(*closed))) {
      out.bounded = false;
      out.values.clear();
      out.rule = "NotBounded";
      return out;
    }
    if (closed && probe_max > *closed * (1 + 1e-9) + 1e-12)
      throw Error(ErrorCode::kPreconditionViolated, a.name() + ": probe exceeds the closed-form bound");
    closed_form = closed_form && closed.has_value();
    bounds.push_back(closed ? *closed : probe_max);
  }
  out.bounded = true;
  Nat running = 0;
  for (double b : bounds) {
    running = std::max(running, CeilNat(b));
    out.values.push_back(running);
  }
  const bool constant = std::all_of(out.values.begin(), out.values.end(), [&](Nat v) { return v == out.values.back(); });
  std::ostringstream rule;
  if (constant) {
    rule << "lambda n. " << out.values.back();
  } else if (auto lin = dynamic_cast<const LinearOperator*>(&a)) {
    rule << "lambda n. ceil(" << lin->operator_norm() << "*n)";
  } else {
    rule << (closed_form ? "closed-form" : "empirical") << " table";
  }
  out.rule = rule.str();
  return out;
}

}  // namespace proofmine
