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

// Command-line front end. Talks to the core only through the C interface; the
// text output is a rendering of the JSON each call returns.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phaselab/phaselab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitChecksFailed = 2;
constexpr int kExitNegative = 3;

class CallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { phaselab_string_free(p); }
};

void check(phaselab_status status, const char* what) {
  if (status != PHASELAB_OK) {
    throw CallError(std::string(what) + ": " + phaselab_status_name(status) + ": " + phaselab_last_error());
  }
}

std::string take(const std::function<phaselab_status(char**)>& call, const char* what) {
  OwnedString s;
  check(call(&s.p), what);
  return s.p;
}

using ContextPtr = std::unique_ptr<phaselab_context, decltype(&phaselab_context_destroy)>;

ContextPtr open_context(const std::string& theory) {
  phaselab_context* raw = nullptr;
  check(phaselab_context_create(theory.c_str(), &raw), "theory");
  return ContextPtr(raw, &phaselab_context_destroy);
}

// --- text rendering ---------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured()) return false;
    }
  }
  return true;
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object() || row.size() != v[0].size()) return false;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!v[0].contains(it.key()) || !is_flat(it.value())) return false;
    }
  }
  return true;
}

void render_table(std::ostream& os, const Json& rows, const std::string& pad) {
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], scalar_text(row[keys[c]]).size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << pad;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << "\n";
  };
  line(keys);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& k : keys) cells.push_back(scalar_text(row[k]));
    line(cells);
  }
}

void render(std::ostream& os, const Json& v, const std::string& pad) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (is_flat(it.value())) {
        os << pad << it.key() << ": " << scalar_text(it.value()) << "\n";
      } else if (is_table(it.value())) {
        os << pad << it.key() << ":\n";
        render_table(os, it.value(), pad + "  ");
      } else {
        os << pad << it.key() << ":\n";
        render(os, it.value(), pad + "  ");
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_flat(v[i])) {
        os << pad << "- " << scalar_text(v[i]) << "\n";
      } else {
        os << pad << "[" << i << "]\n";
        render(os, v[i], pad + "  ");
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

// --- options ----------------------------------------------------------------

struct Options {
  std::string theory = "stab";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool json = false;
  bool timing = false;
  unsigned arity = 1;
  std::string mode = "prob";
  std::string observable = "Z";
  std::size_t trials = 200;
  std::string out;
  bool arity3 = false;
};

void emit(const Options& o, const std::string& json_text) {
  if (o.json) {
    std::cout << Json::parse(json_text).dump(2) << "\n";
  } else {
    render(std::cout, Json::parse(json_text), "");
  }
}

int run_report(const Options& o) {
  phaselab_report_options ro;
  phaselab_report_options_default(&ro);
  ro.seed = o.seed;
  ro.threads = o.threads;
  ro.timing = o.timing ? 1 : 0;
  ro.spider_trials = o.trials;
  ro.arity3 = o.arity3 ? 1 : 0;
  const std::string json = take([&](char** out) { return phaselab_full_report(&ro, out); }, "report");
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw CallError("cannot write " + o.out);
    f << json;
  }
  if (o.json) {
    std::cout << json;
  } else {
    std::cout << take([&](char** out) { return phaselab_render_report(json.c_str(), out); }, "render");
  }
  const Json report = Json::parse(json);
  if (!report["ok"].get<bool>()) {
    for (const auto& c : report["checks"]) {
      if (!c["ok"].get<bool>()) std::cerr << "check failed: " << c["id"].get<std::string>() << "\n";
    }
    return kExitChecksFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phaselab: exact phase groups, GHZ correlations and local models for Stab and Spek"};
  app.set_version_flag("--version", std::string(phaselab_version()));
  app.require_subcommand(1);
  Options o;

  auto theory_opt = [&](CLI::App* sub) {
    sub->add_option("--theory", o.theory, "stab or spek")->check(CLI::IsMember({"stab", "spek"}, CLI::ignore_case));
  };
  auto common = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_flag("--json", o.json, "emit JSON instead of text");
    sub->add_option("--seed", o.seed, "RNG seed (falls back to PHASELAB_SEED)")->envname("PHASELAB_SEED");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  std::function<int()> action;

  auto* report = app.add_subcommand("report", "run both theories end to end and check every expected value");
  common(report);
  report->add_flag("--timing", o.timing, "include wall-clock runtime (output is then not reproducible)");
  report->add_option("--out", o.out, "also write the JSON report to this file");
  report->add_option("--spider-trials", o.trials, "random diagrams per spider shape");
  report->add_flag("--arity3", o.arity3, "also count three-system states");
  report->callback([&] { action = [&] { return run_report(o); }; });

  auto json_call = [&](std::function<phaselab_status(phaselab_context*, char**)> f) {
    return [&o, f] {
      auto ctx = open_context(o.theory);
      emit(o, take([&](char** out) { return f(ctx.get(), out); }, "call"));
      return kExitOk;
    };
  };

  auto* theory = app.add_subcommand("theory", "build a theory and enumerate its states and observables");
  theory->require_subcommand(1);
  auto* build = theory->add_subcommand("build", "generators, delta and epsilon");
  common(build);
  theory_opt(build);
  build->add_option("name", o.theory, "stab or spek")->check(CLI::IsMember({"stab", "spek"}, CLI::ignore_case));
  build->callback([&] { action = json_call(phaselab_theory_build); });

  auto* states = theory->add_subcommand("states", "breadth-first state enumeration");
  common(states);
  theory_opt(states);
  states->add_option("--arity", o.arity, "number of systems")->check(CLI::Range(1u, 3u));
  states->callback([&] {
    action = json_call([&](phaselab_context* c, char** out) { return phaselab_theory_states(c, o.arity, out); });
  });

  auto* tobs = theory->add_subcommand("observables", "observables with eigenstates and unbiased states");
  common(tobs);
  theory_opt(tobs);
  tobs->callback([&] { action = json_call(phaselab_theory_observables); });

  auto* muqt = theory->add_subcommand("verify-muqt", "check the mutually unbiased qubit conditions");
  common(muqt);
  theory_opt(muqt);
  muqt->callback([&] { action = json_call(phaselab_theory_verify_muqt); });

  auto* obs = app.add_subcommand("observables", "same as 'theory observables'");
  common(obs);
  theory_opt(obs);
  obs->callback([&] { action = json_call(phaselab_theory_observables); });

  auto* pg = app.add_subcommand("phase-group", "phase group of an observable and its isomorphism class");
  common(pg);
  theory_opt(pg);
  pg->add_option("--observable", o.observable, "Z, X or Y")->check(CLI::IsMember({"Z", "X", "Y"}));
  pg->callback([&] {
    action = json_call(
        [&](phaselab_context* c, char** out) { return phaselab_phase_group(c, o.observable.c_str(), out); });
  });

  auto* ghz = app.add_subcommand("ghz", "GHZ state of an observable, its axioms and round trip");
  common(ghz);
  theory_opt(ghz);
  ghz->add_option("--observable", o.observable, "Z, X or Y")->check(CLI::IsMember({"Z", "X", "Y"}));
  ghz->callback([&] {
    action = json_call([&](phaselab_context* c, char** out) { return phaselab_ghz(c, o.observable.c_str(), out); });
  });

  auto* corr = app.add_subcommand("correlations", "GHZ correlation table and its symbolic match");
  common(corr);
  theory_opt(corr);
  corr->callback([&] { action = json_call(phaselab_correlations); });

  auto* lhv = app.add_subcommand("lhv", "local hidden variable model for the GHZ state (exit 3 if none exists)");
  common(lhv);
  theory_opt(lhv);
  lhv->add_option("--mode", o.mode, "prob or poss")->check(CLI::IsMember({"prob", "poss"}));
  lhv->callback([&] {
    action = [&] {
      auto ctx = open_context(o.theory);
      const std::string json = take([&](char** out) { return phaselab_lhv(ctx.get(), o.mode.c_str(), out); }, "lhv");
      emit(o, json);
      return Json::parse(json)["verdict"] == "infeasible" ? kExitNegative : kExitOk;
    };
  });

  auto* mermin = app.add_subcommand("mermin", "parity contradiction certificate (exit 3 if found)");
  common(mermin);
  theory_opt(mermin);
  mermin->callback([&] {
    action = [&] {
      auto ctx = open_context(o.theory);
      const std::string json = take([&](char** out) { return phaselab_mermin(ctx.get(), out); }, "mermin");
      emit(o, json);
      return Json::parse(json)["certificate"].is_null() ? kExitOk : kExitNegative;
    };
  });

  auto* spider = app.add_subcommand("spider-test", "random connected diagrams against the canonical spider");
  common(spider);
  theory_opt(spider);
  spider->add_option("--trials", o.trials, "diagrams per boundary shape");
  spider->callback([&] {
    action = [&] {
      auto ctx = open_context(o.theory);
      const std::string json = take(
          [&](char** out) { return phaselab_spider_test(ctx.get(), o.trials, o.seed, o.threads, out); }, "spider-test");
      emit(o, json);
      return Json::parse(json)["failures"].get<std::size_t>() == 0 ? kExitOk : kExitChecksFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    return action ? action() : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "phaselab: " << e.what() << "\n";
    return kExitError;
  }
}
