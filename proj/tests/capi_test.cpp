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

#include "phaselab/phaselab.h"

#include <gtest/gtest.h>

#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

class Context {
 public:
  explicit Context(const char* theory) { status_ = phaselab_context_create(theory, &ctx_); }
  ~Context() { phaselab_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  phaselab_context* get() const { return ctx_; }
  phaselab_status status() const { return status_; }

 private:
  phaselab_context* ctx_ = nullptr;
  phaselab_status status_;
};

template <class F>
Json call(F&& f) {
  char* out = nullptr;
  const phaselab_status s = f(&out);
  EXPECT_EQ(s, PHASELAB_OK) << phaselab_last_error();
  if (out == nullptr) return Json();
  Json j = Json::parse(out);
  phaselab_string_free(out);
  return j;
}

TEST(CApiTest, VersionAndSchema) {
  EXPECT_FALSE(std::string(phaselab_version()).empty());
  EXPECT_EQ(phaselab_report_schema_version(), 1);
  EXPECT_STREQ(phaselab_status_name(PHASELAB_OK), "ok");
}

TEST(CApiTest, UnknownTheoryIsInvalidArgument) {
  Context c("qutrit");
  EXPECT_EQ(c.status(), PHASELAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(c.get(), nullptr);
  EXPECT_NE(std::string(phaselab_last_error()).find("qutrit"), std::string::npos);
}

TEST(CApiTest, NullArgumentsRejected) {
  EXPECT_EQ(phaselab_context_create("stab", nullptr), PHASELAB_ERR_NULL_ARGUMENT);
  phaselab_context* ctx = nullptr;
  EXPECT_EQ(phaselab_context_create(nullptr, &ctx), PHASELAB_ERR_NULL_ARGUMENT);
  char* out = nullptr;
  EXPECT_EQ(phaselab_theory_build(nullptr, &out), PHASELAB_ERR_NULL_ARGUMENT);
  Context c("stab");
  EXPECT_EQ(phaselab_theory_build(c.get(), nullptr), PHASELAB_ERR_NULL_ARGUMENT);
  EXPECT_EQ(phaselab_lhv(c.get(), nullptr, &out), PHASELAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(out, nullptr);
  phaselab_context_destroy(nullptr);
  phaselab_string_free(nullptr);
}

TEST(CApiTest, BadOptionValuesAreInvalidArgument) {
  Context c("SPEK");
  ASSERT_EQ(c.status(), PHASELAB_OK);
  char* out = nullptr;
  EXPECT_EQ(phaselab_lhv(c.get(), "quantum", &out), PHASELAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(phaselab_phase_group(c.get(), "W", &out), PHASELAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(phaselab_theory_states(c.get(), 7, &out), PHASELAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(phaselab_render_report("{not json", &out), PHASELAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(out, nullptr);
}

TEST(CApiTest, StatesAndObservables) {
  for (const char* theory : {"stab", "spek"}) {
    Context c(theory);
    ASSERT_EQ(c.status(), PHASELAB_OK);
    EXPECT_EQ(call([&](char** o) { return phaselab_theory_states(c.get(), 1, o); })["count"], 6);
    const Json two = call([&](char** o) { return phaselab_theory_states(c.get(), 2, o); });
    EXPECT_EQ(two["count"], 60);
    EXPECT_EQ(two["product_count"], 36);
    EXPECT_EQ(call([&](char** o) { return phaselab_theory_observables(c.get(), o); })["count"], 3);
    EXPECT_EQ(call([&](char** o) { return phaselab_theory_verify_muqt(c.get(), o); })["passed"], true);
  }
}

TEST(CApiTest, PhaseGroupsAndGhz) {
  Context stab("stab");
  Context spek("spek");
  for (const char* obs : {"Z", "X", "Y"}) {
    EXPECT_EQ(call([&](char** o) { return phaselab_phase_group(stab.get(), obs, o); })["iso"], "Z4");
    EXPECT_EQ(call([&](char** o) { return phaselab_phase_group(spek.get(), obs, o); })["iso"], "Z2xZ2");
    const Json g = call([&](char** o) { return phaselab_ghz(spek.get(), obs, o); });
    EXPECT_EQ(g["passed"], true);
    EXPECT_EQ(g["round_trip"], true);
  }
}

TEST(CApiTest, LhvVerdictsAndCertificates) {
  Context stab("stab");
  Context spek("spek");
  const Json s = call([&](char** o) { return phaselab_lhv(stab.get(), "prob", o); });
  EXPECT_EQ(s["verdict"], "infeasible");
  EXPECT_EQ(s["verified"], true);
  EXPECT_FALSE(s["farkas"].empty());
  const Json k = call([&](char** o) { return phaselab_lhv(spek.get(), "prob", o); });
  EXPECT_EQ(k["verdict"], "feasible");
  EXPECT_TRUE(k["measure"][0]["weight"].is_string());
  EXPECT_FALSE(call([&](char** o) { return phaselab_mermin(stab.get(), o); })["certificate"].is_null());
  EXPECT_TRUE(call([&](char** o) { return phaselab_mermin(spek.get(), o); })["certificate"].is_null());
}

TEST(CApiTest, SpiderTestIsReproducible) {
  Context c("stab");
  auto run = [&](unsigned threads) {
    return call([&](char** o) { return phaselab_spider_test(c.get(), 10, 99, threads, o); });
  };
  const Json a = run(1);
  EXPECT_EQ(a["failures"], 0);
  EXPECT_EQ(a, run(3));
}

TEST(CApiTest, FullReportIsDeterministicAndRenders) {
  phaselab_report_options opt;
  phaselab_report_options_default(&opt);
  opt.spider_trials = 10;
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(phaselab_full_report(&opt, &a), PHASELAB_OK) << phaselab_last_error();
  ASSERT_EQ(phaselab_full_report(&opt, &b), PHASELAB_OK);
  EXPECT_STREQ(a, b);
  const Json report = Json::parse(a);
  EXPECT_EQ(report["ok"], true);
  EXPECT_FALSE(report.contains("runtime_seconds"));
  char* text = nullptr;
  ASSERT_EQ(phaselab_render_report(a, &text), PHASELAB_OK);
  EXPECT_NE(std::string(text).find("checks passed"), std::string::npos);
  phaselab_string_free(text);
  phaselab_string_free(a);
  phaselab_string_free(b);
}

}  // namespace
