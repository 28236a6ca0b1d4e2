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

#ifndef PROOFMINE_TOOLS_CLI_HPP_
#define PROOFMINE_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "proofmine/operator_checks.hpp"

namespace proofmine::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr const char* kToleranceEnv = "PROOFMINE_TOL";

/// Exit codes: 0 all checks pass, 1 some check failed, 2 the input was
/// rejected by the library (bad formula file, unknown instance, ...).
/// Command-line usage errors return the parser's nonzero code.
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Result of one subcommand: a JSON report, whether every check in scope
/// passed and a one-line human summary.
struct Outcome {
  Json report;
  bool passed = true;
  std::string summary;
};

Json CheckResultToJson(const CheckResult& r);
Json CheckReportToJson(const CheckReport& r);

Outcome TypesCommand(const std::string& type_text, std::uint64_t seed);
Outcome TranslateCommand(const std::string& path, bool dialectica, bool check, Nat model_size,
                         std::uint64_t seed);
Outcome DeltaCommand(const std::string& path, std::uint64_t seed);
Outcome RealCanonCommand(const std::string& rational, unsigned precision, std::uint64_t seed);
Outcome OplabVerifyCommand(const std::string& instance, const VerifyOptions& options,
                           std::uint64_t instance_seed = 0);

struct MajorantParams {
  std::optional<Nat> n, m, l, k;
  std::vector<std::string> instances;
};
Outcome MajorantResolventCommand(const MajorantParams& params, const VerifyOptions& options);
Outcome MajorantBobsCommand(const std::string& instance, std::uint64_t seed);

struct RunParams {
  std::string algorithm = "ppa";
  std::string instance = "abs_subdiff";
  std::string t_instance = "identity";
  std::string s_instance = "abs_subdiff";
  std::string gamma = "const:1";
  std::string mu = "const:1";
  std::string lambda = "const:1";
  std::size_t steps = 100;
  std::string x0 = "3.5";
  std::string zero;
  std::string out;
  std::string csv;
  std::uint64_t instance_seed = 0;
};
Outcome RunCommand(const RunParams& params, std::uint64_t seed);
Outcome ReportCommand(const std::string& trace_path, const std::string& csv_path, std::uint64_t seed);

/// Every subcommand on a fixed set of inputs; the combined report is a
/// function of seed and samples only.
Outcome SuiteCommand(std::uint64_t seed, std::size_t samples, double tolerance, unsigned jobs);

/// Parses "v" (broadcast to dim) or "v1,v2,...".
Vec ParseVector(const std::string& text, int dim);

/// Full command-line entry point; JSON goes to out, summaries and usage
/// messages to err.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proofmine::cli

#endif  // PROOFMINE_TOOLS_CLI_HPP_
