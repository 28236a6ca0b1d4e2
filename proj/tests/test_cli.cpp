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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using proofmine::cli::Json;
using proofmine::cli::Run;

namespace {

struct Captured {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Captured Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Captured c;
  c.code = Run(args, out, err);
  c.out = out.str();
  c.err = err.str();
  return c;
}

std::filesystem::path TempFile(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("successful commands exit zero and report the seed") {
  const Captured t = Invoke({"types", "X(X)(1)"});
  CHECK(t.code == 0);
  CHECK(t.json()["seed"] == 7);
  CHECK_FALSE(t.err.empty());
  const Captured r = Invoke({"--seed", "19", "real", "canon", "1/3", "--prec", "4"});
  CHECK(r.code == 0);
  CHECK(r.json()["seed"] == 19);
  CHECK(r.json()["entries"].size() == 5);
}

TEST_CASE("usage errors") {
  CHECK(Invoke({}).code != 0);
  CHECK(Invoke({"frobnicate"}).code != 0);
  CHECK(Invoke({"real", "canon"}).code != 0);
  CHECK(Invoke({"translate", "/no/such/file.fml"}).code != 0);
  CHECK(Invoke({"--jobs", "0", "suite"}).code != 0);
  const Captured bad = Invoke({"types", "X("});
  CHECK(bad.code == proofmine::cli::kExitInputError);
  CHECK(bad.json()["error"] == "ParseError");
  CHECK(bad.json()["seed"] == 7);
  const Captured neg = Invoke({"real", "canon", "-1/2"});
  CHECK(neg.code == proofmine::cli::kExitInputError);
  CHECK(neg.json()["error"] == "NegativeInput");
  CHECK(Invoke({"oplab", "verify", "no_such_instance"}).code == proofmine::cli::kExitInputError);
}

TEST_CASE("failed checks exit nonzero with a report") {
  const Captured c = Invoke({"--tol", "-1", "oplab", "verify", "identity", "--samples", "20"});
  CHECK(c.code == proofmine::cli::kExitCheckFailed);
  CHECK(c.json()["report"]["passed"] == false);
}

TEST_CASE("tolerance from the environment") {
  ::setenv(proofmine::cli::kToleranceEnv, "0.5", 1);
  const Captured env = Invoke({"oplab", "verify", "abs_subdiff", "--samples", "20"});
  ::unsetenv(proofmine::cli::kToleranceEnv);
  CHECK(env.code == 0);
  CHECK(env.json()["report"]["tolerance"] == 0.5);
  const Captured flag = Invoke({"--tol", "0.25", "oplab", "verify", "abs_subdiff", "--samples", "20"});
  CHECK(flag.json()["report"]["tolerance"] == 0.25);
  const Captured def = Invoke({"oplab", "verify", "abs_subdiff", "--samples", "20"});
  CHECK(def.json()["report"]["tolerance"] == 1e-8);
}

TEST_CASE("config file") {
  const auto cfg = TempFile("proofmine_cli_test.cfg", "# defaults\nseed = 23\nsamples = 40\n");
  const Captured c = Invoke({"--config", cfg.string(), "oplab", "verify", "identity"});
  CHECK(c.code == 0);
  CHECK(c.json()["seed"] == 23);
  CHECK(c.json()["samples"] == 40);
  const Captured o = Invoke({"--config", cfg.string(), "--seed", "5", "oplab", "verify", "identity"});
  CHECK(o.json()["seed"] == 5);

  const auto inst = TempFile("proofmine_cli_instance.cfg", "instance = psd_skew\ninstance_seed = 3\nsamples = 30\n");
  const Captured i = Invoke({"oplab", "verify", inst.string()});
  CHECK(i.code == 0);
  CHECK(i.json()["instance"] == "psd_skew");
  CHECK(i.json()["samples"] == 30);
  std::filesystem::remove(cfg);
  std::filesystem::remove(inst);
}

TEST_CASE("runs and reports") {
  const auto trace = std::filesystem::temp_directory_path() / "proofmine_cli_trace.json";
  const Captured r = Invoke({"run", "ppa", "--instance", "abs_subdiff", "--x0", "3.5", "--gamma", "const:1",
                             "--steps", "200", "--zero", "0", "--out", trace.string()});
  CHECK(r.code == 0);
  CHECK(r.json()["zero_reached_at"] == 4);
  const Captured rep = Invoke({"report", trace.string()});
  CHECK(rep.code == 0);
  CHECK(rep.json()["summary"] == r.json()["summary"]);
  std::filesystem::remove(trace);
  CHECK(Invoke({"run", "ppa", "--gamma", "linear:1"}).code == proofmine::cli::kExitInputError);
  CHECK(Invoke({"run", "moudafi", "--t", "identity", "--s", "identity", "--x0", "1,1", "--steps", "10"}).code == 0);
}

TEST_CASE("suite output is deterministic") {
  const Captured a = Invoke({"--seed", "3", "--samples", "100", "suite"});
  const Captured b = Invoke({"--seed", "3", "--samples", "100", "--jobs", "3", "suite"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["seed"] == 3);
}
