#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "netrobust/claims.hpp"

using namespace netrobust;
using claims::ClaimRecord;
using claims::ClaimStatus;
using claims::Expectation;
using claims::Metric;

namespace {

std::map<Metric, Expectation> by_metric(const std::vector<ClaimRecord>& list) {
  std::map<Metric, Expectation> out;
  for (const ClaimRecord& c : list) out[c.metric] = c.expected;
  return out;
}

bool is_int(const Expectation& e, long long v) {
  return e.kind == Expectation::Kind::Int && e.value == v;
}

bool is_bool(const Expectation& e, bool b) {
  return e.kind == Expectation::Kind::Bool && e.truth == b;
}

bool not_stated(const Expectation& e) { return e.kind == Expectation::Kind::NotStated; }

}  // namespace

TEST_CASE("catalog for DCell(2,2)") {
  auto m = by_metric(claims::claims_for(2, 2));
  CHECK(is_int(m[Metric::Lambda], 3));
  CHECK(is_int(m[Metric::Lambda2], 4));
  CHECK(is_int(m[Metric::Lambda3], 5));
  CHECK(is_int(m[Metric::Xi2], 4));
  CHECK(is_int(m[Metric::Xi3], 5));
  CHECK(is_int(m[Metric::Mp], 3));
  CHECK(is_int(m[Metric::Mp1], 4));
  CHECK(is_int(m[Metric::Alpha], 19));
  CHECK(is_bool(m[Metric::SuperLambda], true));
  CHECK(is_bool(m[Metric::SuperLambda2], true));
  CHECK(is_bool(m[Metric::SuperLambda3], true));
  CHECK(is_bool(m[Metric::SuperMatched], true));
  CHECK(not_stated(m[Metric::CondSuperMatched]));
  CHECK(is_bool(m[Metric::IsomorphicToStar], false));
}

TEST_CASE("catalog for DCell(3,4)") {
  auto m = by_metric(claims::claims_for(3, 4));
  // 3n + 3k - 9 with n = 4, k = 3.
  CHECK(is_int(m[Metric::Lambda3], 12));
  CHECK(is_bool(m[Metric::SuperLambda3], false));
  CHECK(is_int(m[Metric::Lambda], 6));
}

TEST_CASE("catalog for DCell(1,n)") {
  auto m4 = by_metric(claims::claims_for(1, 4));
  CHECK(is_int(m4[Metric::Mp], 4));
  CHECK(is_bool(m4[Metric::SuperMatched], true));  // n even
  CHECK(is_bool(m4[Metric::IsomorphicToStar], true));
  CHECK(not_stated(m4[Metric::Lambda2]));
  CHECK(not_stated(m4[Metric::Lambda3]));
  CHECK(not_stated(m4[Metric::Mp1]));
  CHECK(is_int(m4[Metric::Lambda], 4));

  // n = 2 sits below the mp statement's n >= 3 hypothesis, and D_{1,2} is a
  // 6-cycle, which is not super matched.
  auto m2 = by_metric(claims::claims_for(1, 2));
  CHECK(not_stated(m2[Metric::Mp]));
  CHECK(is_bool(m2[Metric::SuperMatched], false));

  auto m5 = by_metric(claims::claims_for(1, 5));
  CHECK(is_bool(m5[Metric::SuperMatched], false));  // n odd
}

TEST_CASE("level 0 states nothing") {
  for (const ClaimRecord& c : claims::claims_for(0, 5)) {
    CHECK(not_stated(c.expected));
  }
}

TEST_CASE("star and complete catalogs") {
  auto s5 = by_metric(claims::star_claims(5));
  CHECK(is_int(s5[Metric::Mp], 4));
  CHECK(is_bool(s5[Metric::SuperMatched], true));  // n odd

  auto s4 = by_metric(claims::star_claims(4));
  CHECK(is_int(s4[Metric::Mp], 3));
  CHECK(is_bool(s4[Metric::SuperMatched], false));  // n even

  auto s3 = by_metric(claims::star_claims(3));
  CHECK(not_stated(s3[Metric::Mp]));  // below the n >= 4 hypothesis

  auto k6 = by_metric(claims::complete_claims(6));
  CHECK(is_int(k6[Metric::Lambda2], 8));
  CHECK(is_int(k6[Metric::Lambda3], 9));
  CHECK(is_bool(k6[Metric::SuperLambda2], true));
  CHECK(is_bool(k6[Metric::SuperLambda3], true));
  CHECK(is_int(k6[Metric::Alpha], 1));

  auto k3 = by_metric(claims::complete_claims(3));
  CHECK(not_stated(k3[Metric::Lambda2]));
  CHECK(not_stated(k3[Metric::Lambda3]));
}

TEST_CASE("claim ids and names") {
  std::vector<ClaimRecord> list = claims::claims_for(2, 2);
  bool found = false;
  for (const ClaimRecord& c : list) {
    if (c.metric == Metric::Lambda2) {
      CHECK(c.id == "dcell(2,2):lambda2");
      CHECK(c.k == 2);
      CHECK(c.n == 2);
      found = true;
    }
    // Every stated claim names its statement; unstated metrics carry none.
    if (c.expected.kind != Expectation::Kind::NotStated) {
      CHECK_FALSE(c.source.empty());
    }
  }
  CHECK(found);

  CHECK(claims::family_name(claims::Family::DCell) == "dcell");
  CHECK(claims::metric_name(Metric::CondSuperMatched) == "cond_super_matched");
  CHECK(claims::status_name(ClaimStatus::Pass) == "PASS");
}

TEST_CASE("expectation text") {
  CHECK(Expectation::of_int(7).text() == "7");
  CHECK(Expectation::of_bool(true).text() == "true");
  CHECK(Expectation::of_bool(false).text() == "false");
  CHECK(Expectation::not_stated().text() == "not-stated");
}

TEST_CASE("catalogs are deterministic") {
  auto a = claims::claims_for(2, 3);
  auto b = claims::claims_for(2, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].expected.kind == b[i].expected.kind);
  }
}

TEST_CASE("verification run over desk instances passes everything stated") {
  claims::PlanOptions opts;
  opts.dcell_instances = {{1, 3}, {1, 4}, {2, 2}};
  opts.include_star_complete = false;
  claims::VerificationReport report = claims::run_verification(opts);
  CHECK(report.ok());
  CHECK(report.count(ClaimStatus::Fail) == 0);
  CHECK(report.count(ClaimStatus::Pass) > 0);
  // Everything stated on these instances is desk verifiable.
  for (const auto& ec : report.claims) {
    if (ec.claim.expected.kind != Expectation::Kind::NotStated) {
      CHECK(ec.status == ClaimStatus::Pass);
    }
  }
}

TEST_CASE("unstated metrics still report a computed value when cheap") {
  claims::PlanOptions opts;
  opts.dcell_instances = {{1, 2}};
  opts.include_star_complete = false;
  claims::VerificationReport report = claims::run_verification(opts);
  bool saw_mp = false;
  for (const auto& ec : report.claims) {
    if (ec.claim.metric == Metric::Mp) {
      CHECK(ec.status == ClaimStatus::SkippedNotStated);
      CHECK(ec.has_computed);
      CHECK(ec.computed == "2");
      saw_mp = true;
    }
  }
  CHECK(saw_mp);
}

TEST_CASE("oversized instances are skipped, not attempted") {
  claims::PlanOptions opts;
  opts.dcell_instances = {{3, 3}};
  opts.include_star_complete = false;
  opts.claim_budget_ms = 5000;
  claims::VerificationReport report = claims::run_verification(opts);
  CHECK(report.ok());
  bool saw_skip = false;
  for (const auto& ec : report.claims) {
    if (ec.claim.metric == Metric::Lambda3) {
      CHECK(ec.status == ClaimStatus::SkippedTooLarge);
      CHECK_FALSE(ec.claim.desk_verifiable);
      saw_skip = true;
    }
    CHECK(ec.status != ClaimStatus::Fail);
  }
  CHECK(saw_skip);
}

TEST_CASE("report serialisation and witness replay") {
  claims::PlanOptions opts;
  opts.dcell_instances = {{1, 3}, {2, 2}};
  opts.include_star_complete = false;
  claims::VerificationReport report = claims::run_verification(opts);
  REQUIRE(report.ok());

  nlohmann::json j = report.to_json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["tool"] == "netrobust");
  CHECK(j.contains("claims"));
  CHECK(j["claims"].is_array());
  CHECK(j["claims"].size() == report.claims.size());

  int replayed = claims::revalidate_report(j);
  CHECK(replayed > 0);

  std::string table = report.to_table();
  CHECK(table.find("summary:") != std::string::npos);
  CHECK(table.find("dcell(2,2):lambda2") != std::string::npos);
}

TEST_CASE("witness tampering is detected on replay") {
  claims::PlanOptions opts;
  opts.dcell_instances = {{2, 2}};
  opts.include_star_complete = false;
  claims::VerificationReport report = claims::run_verification(opts);
  nlohmann::json j = report.to_json();

  bool tampered = false;
  for (auto& c : j["claims"]) {
    if (!c.contains("witness") || c["witness"].is_null()) continue;
    auto& w = c["witness"];
    if (w.contains("type") && w["type"] == "cut" && !w["edges"].empty()) {
      w["edges"][0] = nlohmann::json::array({0, 0});
      tampered = true;
      break;
    }
  }
  REQUIRE(tampered);
  CHECK_THROWS_AS(claims::revalidate_report(j), std::runtime_error);
}
