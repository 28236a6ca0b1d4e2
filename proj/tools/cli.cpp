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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "proofmine/algorithms.hpp"
#include "proofmine/error.hpp"
#include "proofmine/formula.hpp"
#include "proofmine/majorization.hpp"
#include "proofmine/operators.hpp"
#include "proofmine/real_codes.hpp"
#include "proofmine/syntax.hpp"
#include "proofmine/types.hpp"

namespace proofmine::cli {
namespace {

Json Slack(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json VarsToJson(const std::vector<TypedVar>& vars) {
  Json a = Json::array();
  for (const auto& v : vars) a.push_back({{"name", v.name}, {"type", v.type.str()}});
  return a;
}

Json VecToJson(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json GridToJson(const std::vector<double>& grid) {
  Json a = Json::array();
  for (double g : grid) a.push_back(g);
  return a;
}

std::string FormatDouble(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

Json TranslateEntry(const Formula& f, bool dialectica, bool check, const FiniteModel& model, bool& passed) {
  Json e;
  e["input"] = f.str();
  if (dialectica) {
    const DialecticaForm d = Dialectica(f);
    e["ex_vars"] = VarsToJson(d.ex_vars);
    e["univ_vars"] = VarsToJson(d.univ_vars);
    e["matrix"] = d.matrix.str();
    e["interpretation"] = d.AsFormula().str();
  } else {
    e["negative_translation"] = NegativeTranslation(f).str();
  }
  if (check) {
    try {
      const SoundnessReport r = CheckInterpretationSoundness(f, model);
      e["soundness"] = {{"value", r.value},
                        {"negative_translation_value", r.negative_translation_value},
                        {"dialectica_value", r.dialectica_value},
                        {"agrees", r.agrees()},
                        {"witness", r.witness}};
      passed = passed && r.agrees();
    } catch (const Error& err) {
      e["soundness"] = {{"skipped", err.what()}};
    }
  }
  return e;
}

Json WitnessesToJson(const MajorantWitnesses& w) {
  return {{"c", VecToJson(w.c)},       {"gamma_tilde", w.gamma_tilde}, {"n", w.majorant.n},
          {"m", w.majorant.m},         {"l", w.majorant.l},            {"k", w.majorant.k}};
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

Json RealCanonEntries(const mpq_class& r, unsigned precision, bool& passed) {
  Json entries = Json::array();
  mpq_class previous = -1;
  for (unsigned n = 0; n <= precision; ++n) {
    const RatCode code = CanonicalRepAt(r, n);
    const auto [a, b] = UnpairJ(code.code);
    const mpq_class value = RatValue(code);
    const mpq_class diff = abs(value - r);
    const bool within = diff <= PowTwoInv(n + 1);
    const bool monotone = value >= previous;
    passed = passed && within && monotone;
    previous = value;
    entries.push_back({{"n", n},
                       {"code", code.code.get_str()},
                       {"pair", {a.get_str(), b.get_str()}},
                       {"value", value.get_str()},
                       {"within_bound", within},
                       {"monotone", monotone}});
  }
  return entries;
}

std::string TraceLine(const std::string& what, const IterationTrace& trace, const TraceSummary& s) {
  std::ostringstream out;
  out << what << " " << trace.instance << ": " << s.steps << " steps, status " << s.status
      << ", final residual " << s.final_residual;
  if (s.fejer) out << ", fejer " << (*s.fejer ? "yes" : "no");
  return out.str();
}

}  // namespace

Json CheckResultToJson(const CheckResult& r) {
  return {{"name", r.name},
          {"passed", r.passed()},
          {"evaluated", r.evaluated},
          {"skipped", r.skipped},
          {"violations", r.violations},
          {"worst_slack", Slack(r.worst_slack)},
          {"worst_index", r.worst_index},
          {"counterexample", r.counterexample}};
}

Json CheckReportToJson(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(CheckResultToJson(c));
  return {{"subject", r.subject},
          {"passed", r.passed()},
          {"tolerance", r.tolerance},
          {"worst_slack", Slack(r.WorstSlack())},
          {"checks", checks}};
}

Vec ParseVector(const std::string& text, int dim) {
  std::vector<double> values;
  for (const auto& part : Split(text, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "not a number: '" + part + "'");
    }
  }
  if (values.size() == 1) return Vec::Constant(dim, values[0]);
  if (values.size() != static_cast<std::size_t>(dim))
    throw Error(ErrorCode::kPreconditionViolated, "vector '" + text + "' has " + std::to_string(values.size()) +
                                                      " entries, instance dimension is " + std::to_string(dim));
  return Eigen::Map<const Vec>(values.data(), dim);
}

Outcome TypesCommand(const std::string& type_text, std::uint64_t seed) {
  const FinType t = ParseType(type_text);
  const TypeClassification c = Classify(t);
  Json args = Json::array();
  for (const auto& a : t.arguments()) args.push_back(a.str());
  Outcome o;
  o.report = {{"command", "types"},
              {"seed", seed},
              {"type", t.str()},
              {"in_t", t.in_t()},
              {"degree", c.degree ? Json(*c.degree) : Json(nullptr)},
              {"small", c.small},
              {"admissible", c.admissible},
              {"head", t.head().str()},
              {"arguments", args},
              {"hat", Hat(t).str()}};
  o.summary = "type " + t.str() + ": " + (c.degree ? "degree " + std::to_string(*c.degree) : "mentions X") +
              (c.small ? ", small" : "") + (c.admissible ? ", admissible" : "") + ", hat " + Hat(t).str();
  return o;
}

Outcome TranslateCommand(const std::string& path, bool dialectica, bool check, Nat model_size,
                         std::uint64_t seed) {
  const std::vector<Formula> formulas = ParseFormulaFile(path);
  FiniteModel model;
  model.size = model_size;
  Outcome o;
  Json entries = Json::array();
  for (const auto& f : formulas) entries.push_back(TranslateEntry(f, dialectica, check, model, o.passed));
  o.report = {{"command", "translate"}, {"mode", dialectica ? "dialectica" : "nt"}, {"seed", seed}};
  if (check) o.report["model_size"] = model_size;
  o.report["formulas"] = entries;
  o.summary = "translate: " + std::to_string(formulas.size()) + " formulas" +
              (check ? (o.passed ? ", interpretation sound" : ", SOUNDNESS DISAGREEMENT") : "");
  return o;
}

Outcome DeltaCommand(const std::string& path, std::uint64_t seed) {
  const std::vector<Formula> formulas = ParseFormulaFile(path);
  Json entries = Json::array();
  std::size_t recognized = 0;
  for (const auto& f : formulas) {
    Json e;
    e["input"] = f.str();
    e["class"] = QuantifierClassName(ClassifyQuantifierClass(f));
    std::optional<DeltaForm> d;
    try {
      d = DeltaRecognize(f);
    } catch (const Error& err) {
      e["reason"] = err.what();
    }
    e["recognized"] = d.has_value();
    if (d) {
      ++recognized;
      Json bs = Json::array();
      for (const auto& b : d->b_vars)
        bs.push_back({{"name", b.var.name}, {"type", b.var.type.str()}, {"bound", b.bound.str()}});
      e["a_vars"] = VarsToJson(d->a_vars);
      e["b_vars"] = bs;
      e["c_vars"] = VarsToJson(d->c_vars);
      e["matrix"] = d->matrix.str();
      e["skolemized"] = SkolemizeDelta(*d).str();
    }
    entries.push_back(e);
  }
  Outcome o;
  o.report = {{"command", "delta"}, {"seed", seed}, {"formulas", entries}};
  o.summary = "delta: " + std::to_string(recognized) + " of " + std::to_string(formulas.size()) + " recognized";
  return o;
}

Outcome RealCanonCommand(const std::string& rational, unsigned precision, std::uint64_t seed) {
  mpq_class r;
  if (r.set_str(rational, 10) != 0) throw Error(ErrorCode::kParseError, "not a rational: '" + rational + "'");
  r.canonicalize();
  if (r < 0) throw Error(ErrorCode::kNegativeInput, "canonical representation needs r >= 0, got " + r.get_str());
  Outcome o;
  Json entries = RealCanonEntries(r, precision, o.passed);
  o.report = {{"command", "real canon"}, {"seed", seed}, {"r", r.get_str()}, {"precision", precision},
              {"passed", o.passed}, {"entries", entries}};
  o.summary = "real canon " + r.get_str() + " to index " + std::to_string(precision) +
              (o.passed ? ": all codes within 2^-(n+1)" : ": BOUND VIOLATED");
  return o;
}

Outcome OplabVerifyCommand(const std::string& instance, const VerifyOptions& options,
                           std::uint64_t instance_seed) {
  const OperatorPtr a = MakeInstance(instance, instance_seed);
  const CheckReport report = VerifyInstance(*a, options);
  Outcome o;
  o.passed = report.passed();
  o.report = {{"command", "oplab verify"},
              {"instance", a->name()},
              {"dimension", a->dimension()},
              {"class", ClassSpecName(a->declared_class())},
              {"seed", options.seed},
              {"samples", options.samples},
              {"gamma_grid", GridToJson(options.gamma_grid)},
              {"effective_gamma_grid", GridToJson(EffectiveGammaGrid(*a, options.gamma_grid))},
              {"report", CheckReportToJson(report)}};
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed() ? 0 : 1;
  o.summary = "oplab verify " + a->name() + ": " + std::to_string(report.checks.size()) + " checks, " +
              std::to_string(failed) + " failed, worst slack " + FormatDouble(report.WorstSlack()) + " (seed " +
              std::to_string(options.seed) + ")";
  return o;
}

Outcome MajorantResolventCommand(const MajorantParams& params, const VerifyOptions& options) {
  const std::vector<std::string> names = params.instances.empty() ? CatalogNames() : params.instances;
  const bool fixed = params.n && params.m && params.l && params.k;
  Outcome o;
  Json entries = Json::array();
  std::size_t verified = 0;
  for (const auto& name : names) {
    const OperatorPtr a = MakeInstance(name, 0);
    Json e;
    e["instance"] = a->name();
    if (!a->total_resolvent()) {
      e["skipped"] = "resolvent is not total";
      entries.push_back(e);
      continue;
    }
    const MajorantWitnesses w = ComputeWitnesses(*a);
    ResolventMajorant candidate = w.majorant;
    if (params.n) candidate.n = *params.n;
    if (params.m) candidate.m = *params.m;
    if (params.l) candidate.l = *params.l;
    if (params.k) candidate.k = *params.k;
    e["witnesses"] = WitnessesToJson(w);
    e["rule"] = candidate.Rule();
    if (!ValidWitnesses(candidate, w)) {
      e["skipped"] = "(n,m,l,k) do not dominate the witnesses";
      entries.push_back(e);
      continue;
    }
    const CheckReport res = VerifyResolventMajorant(a, options, candidate);
    const CheckReport chi = VerifyChiMajorant(a, options);
    o.passed = o.passed && res.passed() && chi.passed();
    ++verified;
    e["resolvent_majorant"] = CheckReportToJson(res);
    e["chi_majorant"] = CheckReportToJson(chi);
    entries.push_back(e);
  }
  o.report = {{"command", "majorant resolvent"},
              {"seed", options.seed},
              {"samples", options.samples},
              {"rule", fixed ? ResolventMajorant{*params.n, *params.m, *params.l, *params.k}.Rule()
                             : std::string("per-instance witnesses")},
              {"chi_rule", "lambda x,y. 1"},
              {"passed", o.passed},
              {"instances", entries}};
  o.summary = "majorant resolvent: " + std::to_string(verified) + " instances verified, " +
              (o.passed ? "all pass" : "FAILURES") + " (seed " + std::to_string(options.seed) + ")";
  return o;
}

Outcome MajorantBobsCommand(const std::string& instance, std::uint64_t seed) {
  const OperatorPtr a = MakeInstance(instance, 0);
  const BobsMajorant b = BobsUniformMajorant(*a, 8, seed);
  Outcome o;
  o.report = {{"command", "majorant bobs"},
              {"seed", seed},
              {"instance", a->name()},
              {"bounded", b.bounded},
              {"rule", b.rule},
              {"values", b.values},
              {"probe_max", Slack(b.probe_max)}};
  o.summary = "majorant bobs " + a->name() + ": " + b.rule;
  return o;
}

Outcome RunCommand(const RunParams& p, std::uint64_t seed) {
  IterationTrace trace;
  Json params;
  if (p.algorithm == "ppa") {
    const OperatorPtr a = MakeInstance(p.instance, p.instance_seed);
    const ParamSequence gamma = ParamSequence::Parse(p.gamma);
    const Vec x0 = ParseVector(p.x0, a->dimension());
    const std::optional<Vec> zero = p.zero.empty() ? a->known_zero() : ParseVector(p.zero, a->dimension());
    trace = ProximalPoint(*a, x0, gamma, p.steps, zero);
    params = {{"instance", a->name()}, {"gamma", gamma.str()}};
    const auto reached = ZeroReachedAt(*a, trace);
    params["zero_reached_at"] = reached ? Json(*reached) : Json(nullptr);
  } else if (p.algorithm == "moudafi") {
    const OperatorPtr t = MakeInstance(p.t_instance, p.instance_seed);
    const OperatorPtr s = MakeInstance(p.s_instance, p.instance_seed);
    if (t->dimension() != s->dimension())
      throw Error(ErrorCode::kPreconditionViolated, "T and S have different dimensions");
    const ParamSequence mu = ParamSequence::Parse(p.mu);
    const ParamSequence lambda = ParamSequence::Parse(p.lambda);
    const Vec x0 = ParseVector(p.x0, t->dimension());
    std::optional<Vec> zero;
    if (!p.zero.empty()) zero = ParseVector(p.zero, t->dimension());
    trace = MoudafiIteration(*t, *s, x0, mu, lambda, p.steps, zero);
    params = {{"t", t->name()}, {"s", s->name()}, {"mu", mu.str()}, {"lambda", lambda.str()}};
  } else {
    throw Error(ErrorCode::kParseError, "unknown algorithm '" + p.algorithm + "'");
  }
  const TraceSummary summary = SummarizeTrace(trace);
  Outcome o;
  o.passed = trace.status == "ok" && summary.fejer.value_or(true);
  o.report = {{"command", "run " + p.algorithm}, {"seed", seed}, {"steps", p.steps}, {"x0", p.x0}};
  for (const auto& [k, v] : params.items()) o.report[k] = v;
  o.report["summary"] = SummaryToJson(summary);
  if (!p.out.empty()) {
    std::ofstream(p.out) << TraceToJson(trace).dump(2) << "\n";
    o.report["trace_file"] = p.out;
  } else {
    o.report["trace"] = TraceToJson(trace);
  }
  if (!p.csv.empty()) std::ofstream(p.csv) << TraceToCsv(trace);
  o.summary = TraceLine("run " + p.algorithm, trace, summary);
  return o;
}

Outcome ReportCommand(const std::string& trace_path, const std::string& csv_path, std::uint64_t seed) {
  std::ifstream in(trace_path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + trace_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, trace_path + ": " + e.what());
  }
  const IterationTrace trace = TraceFromJson(j);
  const TraceSummary summary = SummarizeTrace(trace);
  if (!csv_path.empty()) std::ofstream(csv_path) << TraceToCsv(trace);
  Outcome o;
  o.passed = trace.status == "ok" && summary.fejer.value_or(true);
  o.report = {{"command", "report"},
              {"seed", seed},
              {"algorithm", trace.algorithm},
              {"instance", trace.instance},
              {"summary", SummaryToJson(summary)}};
  o.summary = TraceLine("report", trace, summary);
  return o;
}

Outcome SuiteCommand(std::uint64_t seed, std::size_t samples, double tolerance, unsigned jobs) {
  VerifyOptions options;
  options.seed = seed;
  options.samples = samples;
  options.tolerance = tolerance;
  options.jobs = jobs;
  Outcome o;
  Json sections;
  std::vector<std::string> lines;
  auto add = [&](const std::string& key, Json& list, const Outcome& part) {
    list.push_back(part.report);
    o.passed = o.passed && part.passed;
    lines.push_back(part.summary);
    (void)key;
  };

  Json types = Json::array();
  for (const char* t : {"0", "1", "2", "X", "X(X)", "0(X)", "X(X)(1)", "0(0)(1)"})
    add("types", types, TypesCommand(t, seed));
  sections["types"] = types;

  FiniteModel model;
  model.size = 2;
  Json corpus = Json::array();
  bool corpus_ok = true;
  for (const auto& f : GenerateFormulaCorpus(seed)) corpus.push_back(TranslateEntry(f, true, true, model, corpus_ok));
  o.passed = o.passed && corpus_ok;
  sections["translation_soundness"] = {{"model_size", model.size}, {"passed", corpus_ok}, {"formulas", corpus}};
  lines.push_back("translation soundness on " + std::to_string(corpus.size()) + " generated formulas: " +
                  (corpus_ok ? "all agree" : "DISAGREEMENT"));

  Json reals = Json::array();
  for (const char* r : {"0", "1/3", "1/2", "1", "7/5", "10"}) add("real", reals, RealCanonCommand(r, 16, seed));
  sections["real_canon"] = reals;

  Json oplab = Json::array();
  for (const char* name : {"identity", "psd_skew", "abs_subdiff", "box_normal_cone", "neg_half_identity"})
    add("oplab", oplab, OplabVerifyCommand(name, options));
  sections["oplab_verify"] = oplab;

  Json majorants = Json::array();
  add("majorant", majorants, MajorantResolventCommand({}, options));
  for (const auto& name : CatalogNames()) add("bobs", majorants, MajorantBobsCommand(name, seed));
  sections["majorants"] = majorants;

  Json runs = Json::array();
  RunParams ppa;
  ppa.steps = 20;
  ppa.zero = "0";
  add("run", runs, RunCommand(ppa, seed));
  RunParams skew;
  skew.instance = "psd_skew";
  skew.x0 = "1";
  skew.steps = 200;
  add("run", runs, RunCommand(skew, seed));
  sections["runs"] = runs;

  o.report = {{"command", "suite"},
              {"seed", seed},
              {"samples", samples},
              {"tolerance", tolerance},
              {"passed", o.passed},
              {"sections", sections}};
  std::ostringstream summary;
  for (const auto& l : lines) summary << l << "\n";
  summary << "suite: " << (o.passed ? "PASS" : "FAIL") << " (seed " << seed << ")";
  o.summary = summary.str();
  return o;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"proofmine: finite types, functional interpretations and monotone operator checks"};
  app.name("proofmine");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value file with option defaults");

  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
  double tolerance = 1e-8;
  unsigned jobs = 1;
  app.add_option("--seed", seed, "Seed for all sampling")->capture_default_str();
  app.add_option("--samples", samples, "Sample count for property checks")->capture_default_str();
  app.add_option("--tol", tolerance, "Tolerance for inequality checks")
      ->envname(kToleranceEnv)
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads for sampling checks")->check(CLI::PositiveNumber);

  std::function<Outcome()> action;

  auto* types = app.add_subcommand("types", "Classify a finite type and print its hat type");
  std::string type_text;
  types->add_option("type", type_text, "Type such as X(X)(1)")->required();
  types->callback([&] { action = [&] { return TypesCommand(type_text, seed); }; });

  auto* translate = app.add_subcommand("translate", "Negative translation or Dialectica interpretation");
  std::string formula_path;
  bool nt = false, dialectica = false, check = false;
  Nat model_size = 2;
  auto* nt_flag = translate->add_flag("--nt", nt, "Kuroda negative translation");
  auto* d_flag = translate->add_flag("--dialectica", dialectica, "Goedel functional interpretation");
  nt_flag->excludes(d_flag);
  translate->add_flag("--check", check, "Brute-force soundness check in a finite model");
  translate->add_option("--model-size", model_size, "Largest natural of the finite model")->capture_default_str();
  translate->add_option("file", formula_path, "Formula file")->required()->check(CLI::ExistingFile);
  translate->callback([&] {
    if (!nt && !dialectica) throw CLI::RequiredError("--nt or --dialectica");
    action = [&] { return TranslateCommand(formula_path, dialectica, check, model_size, seed); };
  });

  auto* delta = app.add_subcommand("delta", "Recognize and Skolemize Delta formulas");
  std::string delta_path;
  delta->add_option("file", delta_path, "Formula file")->required()->check(CLI::ExistingFile);
  delta->callback([&] { action = [&] { return DeltaCommand(delta_path, seed); }; });

  auto* real = app.add_subcommand("real", "Real number codes");
  real->require_subcommand(1);
  auto* canon = real->add_subcommand("canon", "Canonical representation of a nonnegative rational");
  std::string rational;
  unsigned precision = 10;
  canon->add_option("r", rational, "Rational p/q")->required();
  canon->add_option("--prec", precision, "Last index")->capture_default_str();
  canon->callback([&] { action = [&] { return RealCanonCommand(rational, precision, seed); }; });

  VerifyOptions options;
  auto options_now = [&] {
    VerifyOptions o = options;
    o.seed = seed;
    o.samples = samples;
    o.tolerance = tolerance;
    o.jobs = jobs;
    return o;
  };

  auto* majorant = app.add_subcommand("majorant", "Majorant checks");
  majorant->require_subcommand(1);
  auto* resolvent = majorant->add_subcommand("resolvent", "Verify the resolvent majorant on catalog instances");
  MajorantParams mparams;
  resolvent->add_option("--n", mparams.n, "Bound on ||c - J c||");
  resolvent->add_option("--m", mparams.m, "gamma~ >= 2^-m");
  resolvent->add_option("--l", mparams.l, "gamma~ <= l");
  resolvent->add_option("--k", mparams.k, "Bound on ||c||");
  resolvent->add_option("--instance", mparams.instances, "Restrict to these instances");
  resolvent->callback([&] { action = [&] { return MajorantResolventCommand(mparams, options_now()); }; });
  auto* bobs = majorant->add_subcommand("bobs", "Uniform majorant of A on bounded sets");
  std::string bobs_instance;
  bobs->add_option("instance", bobs_instance, "Catalog instance")->required();
  bobs->callback([&] { action = [&] { return MajorantBobsCommand(bobs_instance, seed); }; });

  auto* oplab = app.add_subcommand("oplab", "Operator laboratory");
  oplab->require_subcommand(1);
  auto* verify = oplab->add_subcommand("verify", "Property suite for one instance");
  std::string instance;
  std::uint64_t instance_seed = 0;
  auto* grid_opt = verify->add_option("--gamma-grid", options.gamma_grid, "Resolvent parameters")->delimiter(',');
  auto* radius_opt = verify->add_option("--radius", options.radius, "Sampling radius");
  auto* iseed_opt = verify->add_option("--instance-seed", instance_seed, "Seed for randomized instances");
  verify->add_option("instance", instance, "Catalog name or key = value instance file")->required();
  verify->callback([&] {
    action = [&, grid_opt, radius_opt, iseed_opt] {
      std::string name = instance;
      VerifyOptions o = options_now();
      if (std::filesystem::is_regular_file(instance)) {
        name.clear();
        for (const auto& item : CLI::ConfigINI().from_file(instance)) {
          const std::string value = item.inputs.empty() ? "" : item.inputs.front();
          const std::string& key = item.name;
          if (key == "instance") name = value;
          else if (key == "instance_seed" && !iseed_opt->count()) instance_seed = std::stoull(value);
          else if (key == "samples" && !app.get_option("--samples")->count()) o.samples = std::stoull(value);
          else if (key == "tol" && !app.get_option("--tol")->count()) o.tolerance = std::stod(value);
          else if (key == "seed" && !app.get_option("--seed")->count()) o.seed = std::stoull(value);
          else if (key == "radius" && !radius_opt->count()) o.radius = std::stod(value);
          else if (key == "gamma_grid" && !grid_opt->count()) {
            o.gamma_grid.clear();
            for (const auto& in : item.inputs)
              for (const auto& g : Split(in, ',')) o.gamma_grid.push_back(std::stod(g));
          }
        }
        if (name.empty()) throw Error(ErrorCode::kParseError, instance + ": missing 'instance' key");
      }
      return OplabVerifyCommand(name, o, instance_seed);
    };
  });

  auto* run = app.add_subcommand("run", "Run an iteration and summarize the trace");
  run->require_subcommand(1);
  RunParams rparams;
  auto* ppa = run->add_subcommand("ppa", "Proximal point algorithm x_{n+1} = J_{gamma_n} x_n");
  auto* moudafi = run->add_subcommand("moudafi", "x_{n+1} = J^S_{mu_n}(x_n + mu_n T_{lambda_n} x_n)");
  for (auto* cmd : {ppa, moudafi}) {
    cmd->add_option("--steps", rparams.steps, "Iterations")->capture_default_str();
    cmd->add_option("--x0", rparams.x0, "Start point, scalar or comma list")->capture_default_str();
    cmd->add_option("--zero", rparams.zero, "Known zero for distance and Fejer tracking");
    cmd->add_option("--out", rparams.out, "Write the JSON trace here");
    cmd->add_option("--csv", rparams.csv, "Write the trace as CSV here");
    cmd->add_option("--instance-seed", rparams.instance_seed, "Seed for randomized instances");
  }
  ppa->add_option("--instance", rparams.instance, "Catalog instance")->capture_default_str();
  ppa->add_option("--gamma", rparams.gamma, "const:c | harmonic:c | geometric:c:q")->capture_default_str();
  moudafi->add_option("--t", rparams.t_instance, "Instance T")->capture_default_str();
  moudafi->add_option("--s", rparams.s_instance, "Instance S")->capture_default_str();
  moudafi->add_option("--mu", rparams.mu, "Sequence mu_n")->capture_default_str();
  moudafi->add_option("--lambda", rparams.lambda, "Sequence lambda_n")->capture_default_str();
  ppa->callback([&] {
    rparams.algorithm = "ppa";
    action = [&] { return RunCommand(rparams, seed); };
  });
  moudafi->callback([&] {
    rparams.algorithm = "moudafi";
    action = [&] { return RunCommand(rparams, seed); };
  });

  auto* report = app.add_subcommand("report", "Summarize a saved JSON trace");
  std::string trace_path, csv_path;
  report->add_option("trace", trace_path, "Trace file")->required()->check(CLI::ExistingFile);
  report->add_option("--csv", csv_path, "Also export the trace as CSV");
  report->callback([&] { action = [&] { return ReportCommand(trace_path, csv_path, seed); }; });

  auto* suite = app.add_subcommand("suite", "Every subcommand on a fixed set of inputs");
  suite->callback([&] { action = [&] { return SuiteCommand(seed, samples, tolerance, jobs); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : (code == 0 ? kExitInputError : code);
  }
  if (!action) {
    err << app.help();
    return kExitInputError;
  }
  try {
    const Outcome o = action();
    out << o.report.dump(2) << "\n";
    err << o.summary << "\n";
    return o.passed ? 0 : kExitCheckFailed;
  } catch (const Error& e) {
    const Json j = {{"error", std::string(ErrorCodeName(e.code()))}, {"message", e.what()}, {"seed", seed}};
    out << j.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace proofmine::cli
