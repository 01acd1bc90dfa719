#include "rootedpoly/error.hpp"
#include "rootedpoly/verify.hpp"

#include <gtest/gtest.h>

using namespace rootedpoly;

TEST(Verify, SmallCapSkipsButNeverFails) {
  VerifyOptions opt;
  opt.cap = 6;
  for (const auto& name : {"products", "bipartite"}) {
    const auto reports = run_suites(name, opt);
    ASSERT_EQ(reports.size(), 1U);
    const auto& r = reports.front();
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
    long skipped = 0;
    for (const auto& id : r.identities) {
      EXPECT_EQ(id.failures, 0) << id.id << ": " << id.first_failure;
      skipped += id.skipped;
    }
    EXPECT_GT(skipped, 0) << name;
  }
}

TEST(Verify, ReportShape) {
  const auto reports = run_suites("crosscheck");
  ASSERT_EQ(reports.size(), 1U);
  const auto j = reports.front().to_json();
  EXPECT_EQ(j["suite"], "crosscheck");
  EXPECT_EQ(j["status"], "pass");
  ASSERT_TRUE(j["identities"].is_array());
  for (const auto& id : j["identities"]) {
    for (const char* key : {"id", "description", "exact", "instances", "failures", "skipped", "max_deviation", "status"}) {
      EXPECT_TRUE(id.contains(key)) << key;
    }
    EXPECT_GT(id["instances"].get<long>(), 0) << id["id"];
  }
  EXPECT_NE(reports.front().find("characteristic-determinant"), nullptr);
  EXPECT_EQ(reports.front().find("no-such-identity"), nullptr);
}

TEST(Verify, SuiteNames) {
  EXPECT_EQ(suite_names().size(), 6U);
  EXPECT_THROW(run_suites("everything"), InputError);
}

TEST(Verify, DendrimerSuite) {
  const auto r = verify_dendrimer();
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  const auto* path = r.find("dendrimer-path-spectrum");
  ASSERT_NE(path, nullptr);
  EXPECT_LT(path->max_deviation, 1e-8);
}
