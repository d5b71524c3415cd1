// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON views of every pipeline stage for one theory, and the full Stab versus
// Spek comparison report. Output is deterministic for a fixed seed unless
// timing is requested.

#include <cstdint>
#include <memory>
#include <string>

#include "json.hpp"

namespace phaselab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

std::string version_string();

/// Lazily computed pipeline for "stab" or "spek" (case-insensitive). Results
/// are cached, so repeated queries are cheap.
class TheoryWorkspace {
 public:
  /// Throws std::invalid_argument for an unknown theory name.
  explicit TheoryWorkspace(const std::string& theory);
  ~TheoryWorkspace();
  TheoryWorkspace(TheoryWorkspace&&) noexcept;
  TheoryWorkspace& operator=(TheoryWorkspace&&) noexcept;

  /// "Stab" or "Spek".
  std::string name() const;

  Json build();
  /// Arity 1, 2 or 3.
  Json states(unsigned arity);
  Json observables();
  Json verify_muqt();
  /// Observable label "Z", "X" or "Y".
  Json phase_group(const std::string& observable);
  Json ghz(const std::string& observable);
  Json correlations();
  /// mode "prob" or "poss". The result has "verdict": "feasible" | "infeasible".
  Json lhv(const std::string& mode);
  /// The result has "certificate": null or the contradiction.
  Json mermin();
  Json spider_test(std::size_t trials, std::uint64_t seed, unsigned threads);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ReportOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool timing = false;
  std::size_t spider_trials = 200;
  /// Also count three-system states (slower).
  bool arity3 = false;
};

/// Runs the whole pipeline for both theories. Every expected value appears as
/// a named check; "ok" is true iff all checks pass.
Json full_report(const ReportOptions& options);

/// Plain-text rendering of a report produced by full_report.
std::string render_report_text(const Json& report);

}  // namespace phaselab
