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

#include "phaselab/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <variant>

#include "phaselab/ghz.hpp"
#include "phaselab/lhv.hpp"
#include "phaselab/theories.hpp"

#ifndef PHASELAB_VERSION
#define PHASELAB_VERSION "0.0.0"
#endif

namespace phaselab {

std::string version_string() { return PHASELAB_VERSION; }

namespace {

const std::vector<std::string> kObservableNames{"Z", "X", "Y"};

template <Scalar S>
Json morphism_json(const Morphism<S>& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(e.str());
  return Json{{"dom", m.dom().power}, {"cod", m.cod().power}, {"base_dim", m.dom().base_dim}, {"entries", entries}};
}

Json axioms_json(const AxiomReport& r) {
  Json out = Json::object();
  for (const auto& [name, ok] : r.results) out[name] = ok;
  return out;
}

Json triples_json(const std::vector<IndexTriple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back({t[0], t[1], t[2]});
  return out;
}

std::string hex_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string outcome_bits(const BornTable& t, std::size_t out) {
  std::string s;
  for (unsigned site = 0; site < t.sites; ++site) s += static_cast<char>('0' + t.outcome_bit(out, site));
  return s;
}

/// Bits of a hidden state, one group of observables per site.
std::string assignment_bits(const BornTable& t, std::size_t xi) {
  std::string s;
  for (unsigned site = 0; site < t.sites; ++site) {
    if (site > 0) s += ' ';
    for (unsigned o = 0; o < t.observables(); ++o) {
      s += static_cast<char>('0' + ((xi >> (site * t.observables() + o)) & 1u));
    }
  }
  return s;
}

std::string context_string(const std::vector<unsigned>& ctx) {
  std::string s;
  for (unsigned o : ctx) s += kObservableNames.at(o);
  return s;
}

template <Scalar S>
struct Run {
  TheoryBinding<S> theory;
  std::map<unsigned, StateSpace<S>> spaces;
  std::optional<std::vector<Observable<S>>> observables;
  std::optional<StateCatalog<S>> catalog;
  std::optional<CanonicalStates<S>> canonical;
  std::optional<GHZStructure<S>> ghz;
  std::optional<CorrelationTable> table;
  std::optional<BornTable> born;

  const StateSpace<S>& space(unsigned n) {
    auto it = spaces.find(n);
    if (it == spaces.end()) it = spaces.emplace(n, enumerate_states(theory, n)).first;
    return it->second;
  }
  const std::vector<Morphism<S>>& states1() { return space(1).states; }
  const std::vector<Observable<S>>& obs() {
    if (!observables) observables = enumerate_observables(theory, states1());
    return *observables;
  }
  const Observable<S>& observable(const std::string& label) {
    for (const auto& o : obs()) {
      if (o.label == label) return o;
    }
    throw std::invalid_argument("unknown observable '" + label + "' (expected Z, X or Y)");
  }
  const StateCatalog<S>& cat() {
    if (!catalog) catalog = build_catalog(obs(), states1());
    return *catalog;
  }
  const CanonicalStates<S>& canon() {
    if (!canonical) canonical = canonical_states(obs(), cat().eigen, states1());
    return *canonical;
  }
  const GHZStructure<S>& ghz_z() {
    if (!ghz) ghz = ghz_from_observable(obs().at(0));
    return *ghz;
  }
  const CorrelationTable& tab() {
    if (!table) table = correlation_triples(ghz_z(), canon());
    return *table;
  }
  const BornTable& born_table_z() {
    if (!born) {
      std::vector<std::vector<Morphism<S>>> eigen;
      for (std::size_t o = 0; o < 3; ++o) eigen.push_back({canon().states[2 * o], canon().states[2 * o + 1]});
      born = born_table(ghz_z().psi, eigen, kObservableNames);
    }
    return *born;
  }

  // -------------------------------------------------------------------------

  Json build_json() {
    Json single = Json::array();
    for (const auto& [name, g] : theory.single_system) single.push_back(name);
    Json gens = Json::array();
    for (const auto& [name, g] : theory.generators) gens.push_back(name);
    return Json{{"theory", theory.name},
                {"base_dim", theory.base_dim()},
                {"scalars", scalar_kind_name<S>},
                {"single_system_count", theory.single_system.size()},
                {"single_system_is_group", single_system_is_group(theory)},
                {"single_system", single},
                {"generators", gens},
                {"delta", morphism_json(theory.delta)},
                {"epsilon", morphism_json(theory.epsilon)},
                {"hadamard", morphism_json(theory.hadamard)},
                {"cnot_scale", theory.cnot_scale.str()},
                {"observable_axioms", axioms_json(check_observable(theory.observable()))}};
  }

  Json states_json(unsigned n) {
    const auto& sp = space(n);
    Json list = Json::array();
    for (std::size_t i = 0; i < sp.states.size(); ++i) {
      Json amps = Json::array();
      for (const auto& e : sp.states[i].entries()) amps.push_back(e.str());
      list.push_back(Json{{"amplitudes", amps}, {"provenance", sp.provenance[i]}});
    }
    Json out{{"theory", theory.name},
             {"arity", n},
             {"count", sp.states.size()},
             {"fixpoint_reached", sp.fixpoint_reached},
             {"depth", sp.depth}};
    if (n == 2) {
      std::size_t products = 0;
      for (const auto& s : sp.states) products += is_product_state(s);
      out["product_count"] = products;
      out["entangled_count"] = sp.states.size() - products;
    }
    out["states"] = list;
    return out;
  }

  Json observables_json() {
    Json list = Json::array();
    for (std::size_t o = 0; o < obs().size(); ++o) {
      const auto& ob = obs()[o];
      Json eigen = Json::array();
      for (const auto& x : cat().eigen[o]) eigen.push_back(morphism_json(x));
      Json unbiased = Json::array();
      for (const auto& x : cat().unbiased[o]) unbiased.push_back(morphism_json(x));
      list.push_back(Json{{"label", ob.label},
                          {"delta", morphism_json(ob.delta)},
                          {"epsilon", morphism_json(ob.epsilon)},
                          {"axioms", axioms_json(check_observable(ob))},
                          {"eigenstates", eigen},
                          {"unbiased_states", unbiased}});
    }
    return Json{{"theory", theory.name}, {"count", obs().size()}, {"observables", list}};
  }

  Json muqt_json() {
    auto r = verify_muqt(theory, cat());
    return Json{{"theory", theory.name}, {"conditions", axioms_json(r)}, {"passed", r.passed()}};
  }

  Json phase_group_json(const std::string& label) {
    const auto& ob = observable(label);
    auto pg = phase_group(ob, states1());
    Json elements = Json::array();
    for (const auto& e : pg.elements) elements.push_back(morphism_json(e));
    return Json{{"theory", theory.name},
                {"observable", label},
                {"elements", elements},
                {"table", pg.table},
                {"identity_index", pg.identity_index},
                {"inverse", pg.inverse},
                {"iso", pg.iso.name()},
                {"invariant_factors", pg.iso.invariant_factors},
                {"laws", axioms_json(check_phase_group(ob, pg))}};
  }

  Json ghz_json(const std::string& label) {
    const auto& ob = observable(label);
    auto g = ghz_from_observable(ob);
    auto report = verify_ghz(g);
    bool round_trip = false;
    std::string error;
    try {
      auto back = observable_from_ghz(g);
      round_trip = back.delta == ob.delta && back.epsilon == ob.epsilon;
    } catch (const InvalidGHZStructure& e) {
      error = e.what();
    }
    Json out{{"theory", theory.name},
             {"observable", label},
             {"psi", morphism_json(g.psi)},
             {"epsilon", morphism_json(g.epsilon)},
             {"axioms", axioms_json(report.axioms)},
             {"passed", report.passed()},
             {"needs_review", report.needs_review()},
             {"round_trip", round_trip}};
    if (!error.empty()) out["round_trip_error"] = error;
    return out;
  }

  Json table_json(const CorrelationTable& t) {
    Json states = Json::array();
    for (const auto& s : t.states) {
      states.push_back(Json{{"name", s.name},
                            {"observable", s.observable},
                            {"bit", s.bit},
                            {"group_element", s.group_element}});
    }
    Json out{{"states", states},
             {"triples", triples_json(t.triples)},
             {"forbidden", triples_json(t.forbidden)},
             {"null", triples_json(t.null)},
             {"group_table", t.group}};
    if (!t.weights.empty()) out["weights"] = t.weights;
    return out;
  }

  Json correlations_json() {
    const auto& t = tab();
    Json out{{"theory", theory.name}, {"observable", "Z"}};
    Json body = table_json(t);
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    out["digest"] = hex_digest(table_json(t).dump());
    out["permutation_closed"] = permutation_closed(t);
    out["forbidden_amplitudes_vanish"] = forbidden_amplitudes_vanish(ghz_z(), canon(), t);
    Json symbolic = Json::object();
    for (const auto& [name, spec] :
         {std::pair{std::string("Z4"), AbelianGroupSpec::cyclic(4)}, std::pair{std::string("Z2xZ2"), AbelianGroupSpec::klein()}}) {
      auto m = match_tables(t, correlations_from_group(spec));
      symbolic[name] = m ? Json(*m) : Json(nullptr);
    }
    out["symbolic_matches"] = symbolic;
    out["phase_group"] = canon().group.iso.name();
    return out;
  }

  Json lhv_json(const std::string& mode) {
    const BornTable& base = born_table_z();
    Json out{{"theory", theory.name}, {"mode", mode}, {"state", "GHZ(Z)"}};
    if (mode == "prob") {
      const BornTable t = base.possibilistic ? uniform_over_possible(base) : base;
      out["lifted_from_possibilities"] = base.possibilistic;
      const auto start = std::chrono::steady_clock::now();
      auto cert = lhv_feasibility(t);
      (void)start;
      out["verdict"] = cert.feasible ? "feasible" : "infeasible";
      out["verified"] = cert.verified;
      out["contexts"] = t.contexts.size();
      out["hidden_states"] = std::size_t{1} << (t.sites * t.observables());
      out["constraints"] = cert.row_names.size();
      out["pivots"] = cert.pivots;
      if (cert.feasible) {
        Json measure = Json::array();
        for (const auto& [xi, w] : cert.measure) {
          measure.push_back(Json{{"hidden_state", xi}, {"assignment", assignment_bits(t, xi)}, {"weight", w.str()}});
        }
        out["measure"] = measure;
      } else {
        Json farkas = Json::array();
        for (std::size_t i = 0; i < cert.farkas.size(); ++i) {
          if (!cert.farkas[i].is_zero()) {
            farkas.push_back(Json{{"row", cert.row_names[i]}, {"multiplier", cert.farkas[i].str()}});
          }
        }
        out["farkas"] = farkas;
      }
    } else if (mode == "poss") {
      const BornTable t = base.possibilistic ? base : coarsen_to_possibilities(base);
      out["coarsened_from_probabilities"] = !base.possibilistic;
      auto cert = possibilistic_lhv(t);
      out["verdict"] = cert.feasible ? "feasible" : "infeasible";
      out["consistent_count"] = cert.consistent.size();
      Json consistent = Json::array();
      for (std::size_t xi : cert.consistent) consistent.push_back(assignment_bits(t, xi));
      out["consistent"] = consistent;
      if (cert.uncovered) {
        out["uncovered"] = Json{{"context", t.context_name(cert.uncovered->first)},
                                {"outcome", outcome_bits(t, cert.uncovered->second)}};
      }
    } else {
      throw std::invalid_argument("mode must be 'prob' or 'poss'");
    }
    return out;
  }

  Json born_json(const std::vector<std::string>& contexts) {
    const BornTable& t = born_table_z();
    Json out = Json::object();
    for (std::size_t c = 0; c < t.contexts.size(); ++c) {
      const std::string name = t.context_name(c);
      if (std::find(contexts.begin(), contexts.end(), name) == contexts.end()) continue;
      Json row = Json::object();
      for (std::size_t o = 0; o < t.outcomes(); ++o) row[outcome_bits(t, o)] = t.weights[c][o].str();
      out[name] = row;
    }
    return out;
  }

  Json mermin_json() {
    auto eq_json = [](const ParityEquation& e) {
      return Json{{"context", context_string(e.context)}, {"parity", e.parity ? "odd" : "even"}};
    };
    Json system = Json::array();
    for (const auto& e : parity_system(tab())) system.push_back(eq_json(e));
    Json out{{"theory", theory.name}, {"phase_group", canon().group.iso.name()}, {"system", system}};
    auto cert = mermin_certificate(tab());
    if (cert) {
      Json contra = Json::array();
      for (const auto& e : cert->contradiction) contra.push_back(eq_json(e));
      out["certificate"] = Json{{"contradiction", contra}, {"verified", verify_parity_certificate(*cert)}};
    } else {
      out["certificate"] = nullptr;
    }
    return out;
  }

  Json spider_json(std::size_t trials, std::uint64_t seed, unsigned threads, bool all_observables) {
    Json list = Json::array();
    std::size_t failures = 0;
    for (const auto& ob : obs()) {
      if (!all_observables && ob.label != "Z") continue;
      auto r = spider_property_test(ob, trials, seed, 3, threads);
      Json shapes = Json::array();
      for (const auto& s : r.shapes) {
        shapes.push_back(Json{{"m", s.inputs},
                              {"n", s.outputs},
                              {"trials", s.trials},
                              {"failures", s.failures},
                              {"rejected_draws", s.rejected_draws}});
        failures += s.failures;
      }
      list.push_back(Json{{"observable", ob.label},
                          {"total_trials", r.total_trials()},
                          {"passed", r.passed()},
                          {"shapes", shapes},
                          {"counterexamples", r.counterexamples}});
    }
    return Json{{"theory", theory.name},
                {"seed", seed},
                {"trials_per_shape", trials},
                {"failures", failures},
                {"observables", list}};
  }
};

using AnyRun = std::variant<Run<CycloScalar>, Run<BoolScalar>>;

}  // namespace

struct TheoryWorkspace::Impl {
  AnyRun run;
};

TheoryWorkspace::TheoryWorkspace(const std::string& theory) {
  const std::string t = lower(theory);
  if (t == "stab") {
    impl_ = std::make_unique<Impl>(Impl{Run<CycloScalar>{build_stab()}});
  } else if (t == "spek") {
    impl_ = std::make_unique<Impl>(Impl{Run<BoolScalar>{build_spek()}});
  } else {
    throw std::invalid_argument("unknown theory '" + theory + "' (expected stab or spek)");
  }
}
TheoryWorkspace::~TheoryWorkspace() = default;
TheoryWorkspace::TheoryWorkspace(TheoryWorkspace&&) noexcept = default;
TheoryWorkspace& TheoryWorkspace::operator=(TheoryWorkspace&&) noexcept = default;

std::string TheoryWorkspace::name() const {
  return std::visit([](auto& r) { return r.theory.name; }, impl_->run);
}
Json TheoryWorkspace::build() {
  return std::visit([](auto& r) { return r.build_json(); }, impl_->run);
}
Json TheoryWorkspace::states(unsigned arity) {
  return std::visit([&](auto& r) { return r.states_json(arity); }, impl_->run);
}
Json TheoryWorkspace::observables() {
  return std::visit([](auto& r) { return r.observables_json(); }, impl_->run);
}
Json TheoryWorkspace::verify_muqt() {
  return std::visit([](auto& r) { return r.muqt_json(); }, impl_->run);
}
Json TheoryWorkspace::phase_group(const std::string& observable) {
  return std::visit([&](auto& r) { return r.phase_group_json(observable); }, impl_->run);
}
Json TheoryWorkspace::ghz(const std::string& observable) {
  return std::visit([&](auto& r) { return r.ghz_json(observable); }, impl_->run);
}
Json TheoryWorkspace::correlations() {
  return std::visit([](auto& r) { return r.correlations_json(); }, impl_->run);
}
Json TheoryWorkspace::lhv(const std::string& mode) {
  return std::visit([&](auto& r) { return r.lhv_json(mode); }, impl_->run);
}
Json TheoryWorkspace::mermin() {
  return std::visit([](auto& r) { return r.mermin_json(); }, impl_->run);
}
Json TheoryWorkspace::spider_test(std::size_t trials, std::uint64_t seed, unsigned threads) {
  return std::visit([&](auto& r) { return r.spider_json(trials, seed, threads, true); }, impl_->run);
}

// ---------------------------------------------------------------------------
// Full report

namespace {

struct Expectations {
  std::string phase_group;
  std::string lhv_prob;
  std::string lhv_poss;
  bool mermin;
};

class CheckList {
 public:
  void add(const std::string& id, const Json& expected, const Json& actual) {
    const bool ok = expected == actual;
    all_ok_ = all_ok_ && ok;
    checks_.push_back(Json{{"id", id}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
  }
  Json json() const { return checks_; }
  bool ok() const { return all_ok_; }

 private:
  Json checks_ = Json::array();
  bool all_ok_ = true;
};

template <Scalar S>
Json theory_block(Run<S>& run, const Expectations& want, const ReportOptions& opt, CheckList& checks) {
  const std::string id = lower(run.theory.name);
  Json block = Json::object();

  Json counts = Json::object();
  Json fixpoint = Json::object();
  std::vector<unsigned> arities{1, 2};
  if (opt.arity3) arities.push_back(3);
  for (unsigned n : arities) {
    const auto& sp = run.space(n);
    counts[std::to_string(n)] = sp.states.size();
    fixpoint[std::to_string(n)] = sp.fixpoint_reached;
  }
  std::size_t products = 0;
  for (const auto& s : run.space(2).states) products += is_product_state(s);
  block["state_counts"] = counts;
  block["fixpoint_reached"] = fixpoint;
  block["product_states_2"] = products;
  checks.add(id + ".states.arity1", 6, counts["1"]);
  checks.add(id + ".states.arity2", 60, counts["2"]);
  checks.add(id + ".states.products2", 36, products);
  checks.add(id + ".states.fixpoint", true, fixpoint["1"].get<bool>() && fixpoint["2"].get<bool>());

  Json labels = Json::array();
  bool axioms = true;
  for (const auto& o : run.obs()) {
    labels.push_back(o.label);
    axioms = axioms && check_observable(o).passed();
  }
  block["observables"] = labels;
  checks.add(id + ".observables.count", 3, run.obs().size());
  checks.add(id + ".observables.axioms", true, axioms);

  auto muqt = verify_muqt(run.theory, run.cat());
  block["muqt"] = axioms_json(muqt);
  checks.add(id + ".muqt", true, muqt.passed());
  checks.add(id + ".mutually_unbiased", true, muqt.passed("mutually_unbiased"));

  Json groups = Json::object();
  for (const auto& o : run.obs()) {
    auto pg = phase_group(o, run.states1());
    groups[o.label] = pg.iso.name();
    checks.add(id + ".phase_group." + o.label, want.phase_group, pg.iso.name());
    checks.add(id + ".phase_group_laws." + o.label, true, check_phase_group(o, pg).passed());
  }
  block["phase_groups"] = groups;

  Json ghz = Json::object();
  for (const auto& o : run.obs()) {
    auto j = run.ghz_json(o.label);
    ghz[o.label] = Json{{"axioms", j["axioms"]}, {"round_trip", j["round_trip"]}};
    checks.add(id + ".ghz.axioms." + o.label, true, j["passed"]);
    checks.add(id + ".ghz.round_trip." + o.label, true, j["round_trip"]);
  }
  if constexpr (std::is_same_v<S, CycloScalar>) {
    std::vector<CycloScalar> amps(8, CycloScalar::zero());
    amps[0] = amps[7] = CycloScalar::one();
    const bool standard = equal_up_to_phase(run.ghz_z().psi, Morphism<CycloScalar>::state({3, 2}, amps));
    ghz["standard_ghz"] = standard;
    checks.add(id + ".ghz.standard", true, standard);
  }
  block["ghz"] = ghz;

  auto corr = run.correlations_json();
  block["correlations"] = Json{{"triples", corr["triples"].size()},
                               {"forbidden", corr["forbidden"].size()},
                               {"null", corr["null"].size()},
                               {"digest", corr["digest"]},
                               {"symbolic_matches", corr["symbolic_matches"]}};
  checks.add(id + ".correlations.matches_symbolic", true, !corr["symbolic_matches"][want.phase_group].is_null());
  checks.add(id + ".correlations.permutation_closed", true, corr["permutation_closed"]);
  checks.add(id + ".correlations.forbidden_zero", true, corr["forbidden_amplitudes_vanish"]);

  auto prob = run.lhv_json("prob");
  auto poss = run.lhv_json("poss");
  block["lhv"] = Json{{"prob", Json{{"verdict", prob["verdict"]}, {"verified", prob["verified"]}, {"pivots", prob["pivots"]}}},
                      {"poss", Json{{"verdict", poss["verdict"]}, {"consistent_count", poss["consistent_count"]}}}};
  checks.add(id + ".lhv.prob", want.lhv_prob, prob["verdict"]);
  checks.add(id + ".lhv.verified", true, prob["verified"]);
  checks.add(id + ".lhv.poss", want.lhv_poss, poss["verdict"]);

  auto mermin = run.mermin_json();
  Json contexts = Json::array();
  if (!mermin["certificate"].is_null()) {
    for (const auto& e : mermin["certificate"]["contradiction"]) contexts.push_back(e["context"]);
  }
  block["mermin"] = Json{{"certificate", !mermin["certificate"].is_null()}, {"contexts", contexts}};
  checks.add(id + ".mermin.certificate", want.mermin, !mermin["certificate"].is_null());
  if (want.mermin) {
    checks.add(id + ".mermin.contexts", Json::array({"XXX", "XYY", "YXY", "YYX"}), contexts);
    const Json born = run.born_json({"XXX", "XYY", "YXY", "YYX"});
    block["mermin_probabilities"] = born;
    for (auto it = born.begin(); it != born.end(); ++it) {
      const bool even = it.key() == "XXX";
      Json expected = Json::object();
      for (auto o = it.value().begin(); o != it.value().end(); ++o) {
        const std::string& bits = o.key();
        const int parity = (bits[0] - '0' + bits[1] - '0' + bits[2] - '0') % 2;
        expected[bits] = (parity == (even ? 0 : 1)) ? "1/4" : "0/1";
      }
      checks.add(id + ".born." + it.key(), expected, it.value());
    }
  }

  auto spider = run.spider_json(opt.spider_trials, opt.seed, opt.threads, false);
  block["spider"] = Json{{"observable", "Z"}, {"trials_per_shape", opt.spider_trials}, {"failures", spider["failures"]}};
  checks.add(id + ".spider.failures", 0, spider["failures"]);
  return block;
}

}  // namespace

Json full_report(const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckList checks;
  Run<CycloScalar> stab{build_stab()};
  Run<BoolScalar> spek{build_spek()};
  Json theories = Json::object();
  theories["Stab"] = theory_block(stab, {"Z4", "infeasible", "infeasible", true}, options, checks);
  theories["Spek"] = theory_block(spek, {"Z2xZ2", "feasible", "feasible", false}, options, checks);
  Json report{{"tool", "phaselab"},
              {"version", version_string()},
              {"schema", kReportSchemaVersion},
              {"seed", options.seed},
              {"theories", theories},
              {"checks", checks.json()},
              {"ok", checks.ok()}};
  if (options.timing) {
    report["runtime_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::string render_report_text(const Json& report) {
  std::ostringstream os;
  os << "phaselab " << report.value("version", "?") << "  seed " << report.value("seed", 0) << "\n\n";
  os << "theory  states(1,2)  observables  phase groups             lhv(prob/poss)          mermin\n";
  for (auto it = report["theories"].begin(); it != report["theories"].end(); ++it) {
    const Json& t = it.value();
    std::string groups;
    for (auto g = t["phase_groups"].begin(); g != t["phase_groups"].end(); ++g) {
      groups += g.key() + ":" + g.value().get<std::string>() + " ";
    }
    const std::string lhv =
        t["lhv"]["prob"]["verdict"].get<std::string>() + "/" + t["lhv"]["poss"]["verdict"].get<std::string>();
    char line[256];
    std::snprintf(line, sizeof line, "%-7s %3zu,%-8zu %-12zu %-24s %-23s %s\n", it.key().c_str(),
                  t["state_counts"]["1"].get<std::size_t>(), t["state_counts"]["2"].get<std::size_t>(),
                  t["observables"].size(), groups.c_str(), lhv.c_str(),
                  t["mermin"]["certificate"].get<bool>() ? "certificate" : "none");
    os << line;
  }
  os << "\nchecks\n";
  std::size_t failed = 0;
  for (const auto& c : report["checks"]) {
    const bool ok = c["ok"].get<bool>();
    failed += !ok;
    os << (ok ? "  ok    " : "  FAIL  ") << c["id"].get<std::string>();
    if (!ok) os << "  expected " << c["expected"].dump() << " got " << c["actual"].dump();
    os << "\n";
  }
  os << "\n" << report["checks"].size() - failed << "/" << report["checks"].size() << " checks passed\n";
  if (report.contains("runtime_seconds")) os << "runtime " << report["runtime_seconds"].get<double>() << " s\n";
  return os.str();
}

}  // namespace phaselab
