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

#include "proofmine/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "proofmine/error.hpp"

namespace proofmine {

double ParamSequence::at(std::size_t n) const {
  switch (rule) {
    case Rule::kConstant: return scale;
    case Rule::kHarmonic: return scale / double(n + 1);
    case Rule::kGeometric: return scale * std::pow(ratio, double(n));
  }
  return scale;
}

unsigned ParamSequence::modulus(std::size_t n) const {
  const double g = at(n);
  if (!(g > 0)) throw Error(ErrorCode::kNonPositiveGamma, "parameter sequence is not positive at " + std::to_string(n));
  unsigned alpha = 0;
  while (!(g > std::ldexp(1.0, -static_cast<int>(alpha)))) ++alpha;
  return alpha;
}

std::string ParamSequence::str() const {
  std::ostringstream out;
  switch (rule) {
    case Rule::kConstant: out << "const:" << scale; break;
    case Rule::kHarmonic: out << "harmonic:" << scale; break;
    case Rule::kGeometric: out << "geometric:" << scale << ":" << ratio; break;
  }
  return out.str();
}

ParamSequence ParamSequence::Parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
  auto number = [&](std::size_t i) {
    try {
      return std::stod(parts.at(i));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad parameter sequence '" + text + "'");
    }
  };
  ParamSequence p;
  if (parts.empty()) throw Error(ErrorCode::kParseError, "empty parameter sequence");
  if (parts[0] == "const" && parts.size() == 2) {
    p.rule = Rule::kConstant;
  } else if (parts[0] == "harmonic" && parts.size() == 2) {
    p.rule = Rule::kHarmonic;
  } else if (parts[0] == "geometric" && parts.size() == 3) {
    p.rule = Rule::kGeometric;
    p.ratio = number(2);
    if (!(p.ratio > 0)) throw Error(ErrorCode::kNonPositiveGamma, "geometric ratio must be positive");
  } else {
    throw Error(ErrorCode::kParseError, "bad parameter sequence '" + text + "'");
  }
  p.scale = number(1);
  if (!(p.scale > 0)) throw Error(ErrorCode::kNonPositiveGamma, "parameter scale must be positive");
  return p;
}

namespace {

std::optional<double> DistanceTo(const std::optional<Vec>& zero, const Vec& x) {
  if (!zero) return std::nullopt;
  return (x - *zero).norm();
}

template <typename Step>
IterationTrace Iterate(std::string algorithm, std::string instance, const Vec& x0, std::size_t steps,
                       const std::optional<Vec>& zero, Step&& step) {
  IterationTrace trace;
  trace.algorithm = std::move(algorithm);
  trace.instance = std::move(instance);
  trace.zero = zero;
  Vec x = x0;
  for (std::size_t n = 0; n < steps; ++n) {
    IterationStep rec;
    rec.n = n;
    rec.x = x;
    rec.distance = DistanceTo(zero, x);
    Vec next;
    try {
      next = step(n, x, rec);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutsideDomain) throw;
      trace.status = "outside_domain";
      trace.message = "step " + std::to_string(n) + ": " + e.what();
      break;
    }
    rec.residual = (next - x).norm();
    trace.steps.push_back(std::move(rec));
    x = std::move(next);
    if (!x.allFinite() || x.norm() > kDivergenceBound) {
      trace.status = "diverged";
      trace.message = "step " + std::to_string(n + 1) + ": ||x|| exceeds 1e12";
      break;
    }
  }
  trace.final_point = x;
  trace.final_distance = DistanceTo(zero, x);
  return trace;
}

}  // namespace

IterationTrace ProximalPoint(const SetValuedOperator& a, const Vec& x0, const ParamSequence& gamma,
                             std::size_t steps, const std::optional<Vec>& zero) {
  if (!a.InDomain(x0)) throw Error(ErrorCode::kOutsideDomain, "x0 is outside dom A");
  return Iterate("proximal_point", a.name(), x0, steps, zero, [&](std::size_t n, const Vec& x, IterationStep& rec) {
    const double g = gamma.at(n);
    const Vec next = Resolvent(a, g, x);
    rec.gamma = g;
    rec.yosida_norm = (x - next).norm() / g;
    rec.membership_defect = a.Values(next).Distance((x - next) / g);
    return next;
  });
}

IterationTrace MoudafiIteration(const SetValuedOperator& t, const SetValuedOperator& s, const Vec& x0,
                                const ParamSequence& mu, const ParamSequence& lambda, std::size_t steps,
                                const std::optional<Vec>& zero) {
  return Iterate("moudafi", t.name() + "," + s.name(), x0, steps, zero,
                 [&](std::size_t n, const Vec& x, IterationStep& rec) {
                   const double m = mu.at(n), l = lambda.at(n);
                   const Vec ty = Yosida(t, l, x);
                   const Vec shifted = x + m * ty;
                   const Vec next = Resolvent(s, m, shifted);
                   rec.gamma = m;
                   rec.lambda = l;
                   rec.yosida_norm = ty.norm();
                   rec.membership_defect = s.Values(next).Distance((shifted - next) / m);
                   return next;
                 });
}

TraceSummary SummarizeTrace(const IterationTrace& trace, double fejer_tol) {
  TraceSummary s;
  s.steps = trace.steps.size();
  s.status = trace.status;
  if (trace.steps.empty()) return s;
  s.min_residual = s.max_residual = trace.steps.front().residual;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const IterationStep& st = trace.steps[i];
    s.min_residual = std::min(s.min_residual, st.residual);
    s.max_residual = std::max(s.max_residual, st.residual);
    s.residual_square_sum += st.residual * st.residual;
    s.worst_membership_defect = std::max(s.worst_membership_defect, st.membership_defect);
    if (i > 0 && trace.steps[i - 1].residual > 0) s.residual_ratio = st.residual / trace.steps[i - 1].residual;
  }
  s.final_residual = trace.steps.back().residual;
  if (trace.zero) {
    s.fejer = true;
    s.fejer_worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const double now = *trace.steps[i].distance;
      const double next = i + 1 < trace.steps.size() ? *trace.steps[i + 1].distance : *trace.final_distance;
      const double slack = now - next;
      s.fejer_worst_slack = std::min(s.fejer_worst_slack, slack);
      if (slack < -fejer_tol) s.fejer = false;
    }
  }
  return s;
}

std::optional<std::size_t> ZeroReachedAt(const SetValuedOperator& a, const IterationTrace& trace, double tol) {
  const Vec origin = Vec::Zero(trace.final_point.size());
  for (const IterationStep& st : trace.steps)
    if (a.Contains(st.x, origin, tol)) return st.n;
  if (a.Contains(trace.final_point, origin, tol)) return trace.steps.size();
  return std::nullopt;
}

namespace {

using Json = nlohmann::ordered_json;

Json VecJson(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vec JsonVec(const Json& j) {
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

template <typename T>
Json Optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> FromOptional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

Json TraceToJson(const IterationTrace& trace) {
  Json j;
  j["algorithm"] = trace.algorithm;
  j["instance"] = trace.instance;
  j["status"] = trace.status;
  j["message"] = trace.message;
  j["zero"] = trace.zero ? VecJson(*trace.zero) : Json(nullptr);
  Json steps = Json::array();
  for (const IterationStep& st : trace.steps) {
    Json s;
    s["n"] = st.n;
    s["x"] = VecJson(st.x);
    s["gamma"] = st.gamma;
    s["lambda"] = st.lambda;
    s["residual"] = st.residual;
    s["yosida_norm"] = st.yosida_norm;
    s["membership_defect"] = st.membership_defect;
    s["distance"] = Optional(st.distance);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["final_point"] = VecJson(trace.final_point);
  j["final_distance"] = Optional(trace.final_distance);
  return j;
}

IterationTrace TraceFromJson(const Json& j) {
  IterationTrace t;
  t.algorithm = j.at("algorithm").get<std::string>();
  t.instance = j.at("instance").get<std::string>();
  t.status = j.at("status").get<std::string>();
  t.message = j.at("message").get<std::string>();
  if (!j.at("zero").is_null()) t.zero = JsonVec(j.at("zero"));
  for (const Json& s : j.at("steps")) {
    IterationStep st;
    st.n = s.at("n").get<std::size_t>();
    st.x = JsonVec(s.at("x"));
    st.gamma = s.at("gamma").get<double>();
    st.lambda = s.at("lambda").get<double>();
    st.residual = s.at("residual").get<double>();
    st.yosida_norm = s.at("yosida_norm").get<double>();
    st.membership_defect = s.at("membership_defect").get<double>();
    st.distance = FromOptional<double>(s.at("distance"));
    t.steps.push_back(std::move(st));
  }
  t.final_point = JsonVec(j.at("final_point"));
  t.final_distance = FromOptional<double>(j.at("final_distance"));
  return t;
}

Json SummaryToJson(const TraceSummary& s) {
  Json j;
  j["steps"] = s.steps;
  j["status"] = s.status;
  j["min_residual"] = s.min_residual;
  j["max_residual"] = s.max_residual;
  j["final_residual"] = s.final_residual;
  j["residual_square_sum"] = s.residual_square_sum;
  j["residual_ratio"] = Optional(s.residual_ratio);
  j["fejer"] = Optional(s.fejer);
  j["fejer_worst_slack"] = s.fejer ? Json(s.fejer_worst_slack) : Json(nullptr);
  j["worst_membership_defect"] = s.worst_membership_defect;
  return j;
}

TraceSummary SummaryFromJson(const Json& j) {
  TraceSummary s;
  s.steps = j.at("steps").get<std::size_t>();
  s.status = j.at("status").get<std::string>();
  s.min_residual = j.at("min_residual").get<double>();
  s.max_residual = j.at("max_residual").get<double>();
  s.final_residual = j.at("final_residual").get<double>();
  s.residual_square_sum = j.at("residual_square_sum").get<double>();
  s.residual_ratio = FromOptional<double>(j.at("residual_ratio"));
  s.fejer = FromOptional<bool>(j.at("fejer"));
  s.fejer_worst_slack = s.fejer ? j.at("fejer_worst_slack").get<double>() : 0.0;
  s.worst_membership_defect = j.at("worst_membership_defect").get<double>();
  return s;
}

std::string TraceToCsv(const IterationTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "n,gamma,lambda,residual,yosida_norm,membership_defect,distance";
  const Eigen::Index d = trace.final_point.size();
  for (Eigen::Index i = 0; i < d; ++i) out << ",x" << i;
  out << "\n";
  for (const IterationStep& st : trace.steps) {
    out << st.n << "," << st.gamma << "," << st.lambda << "," << st.residual << "," << st.yosida_norm << ","
        << st.membership_defect << ",";
    if (st.distance) out << *st.distance;
    for (Eigen::Index i = 0; i < d; ++i) out << "," << st.x[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace proofmine
