#include <gtest/gtest.h>

#include "json.hpp"
#include "permpoly/report.hpp"

using namespace permpoly;

TEST(Report, OutcomeJsonShape) {
  CheckOutcome o;
  o.check_name = "hprop";
  o.params = {{"m", 3}, {"k", 2}};
  o.tested = 42;
  o.ms = 1.5;
  auto j = nlohmann::json::parse(to_json(o));
  EXPECT_EQ(j["check"], "hprop");
  EXPECT_EQ(j["params"]["m"], 3);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["tested"], 42);
  EXPECT_TRUE(j["counterexample"].is_null());
  EXPECT_FALSE(j.contains("failures"));

  o.passed = false;
  o.failures = 2;
  o.counterexample = Counterexample{{"x=5"}, "3", "4"};
  j = nlohmann::json::parse(to_json(o, true));
  EXPECT_EQ(j["failures"], 2);
  EXPECT_EQ(j["counterexample"]["inputs"][0], "x=5");
  EXPECT_EQ(j["counterexample"]["lhs"], "3");
  const std::string s = to_json(o);
  EXPECT_EQ(s.find('\n'), std::string::npos);
  EXPECT_LT(s.find("\"check\""), s.find("\"params\""));
}

TEST(Report, SweepCsv) {
  EXPECT_EQ(sweep_csv_header(), "m,k,r,m',alpha,gamma,predicted,observed,t0_image,t1_image,agree");
  PermutationReport r;
  r.m = 3;
  r.k = 2;
  r.r = 2;
  r.m_prime = 1;
  r.gamma = 1;
  r.is_permutation = true;
  r.predicted_by_theorem = true;
  r.t0 = {0u, true};
  r.t1 = {1u, true};
  EXPECT_EQ(to_csv(r), "3,2,2,1,0,1,true,true,T0,T1,true");
  r.t1 = {std::nullopt, false};
  EXPECT_EQ(to_csv(r), "3,2,2,1,0,1,true,true,T0,none,false");
}

TEST(Report, OutcomeCsvQuotesCells) {
  CheckOutcome o;
  o.check_name = "fgprop";
  o.params = {{"m", 5}, {"k", 2}};
  o.passed = false;
  o.counterexample = Counterexample{{"part=vi", "x=1f"}, "a,b", "c"};
  const auto row = to_csv(o);
  EXPECT_EQ(row.rfind("fgprop,m=5 k=2,false,0,0,part=vi x=1f,\"a,b\",c,", 0), 0u);
}
