#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "netrobust/graph.hpp"
#include "netrobust/runtime.hpp"

namespace netrobust::claims {

enum class Family { DCell, Star, Complete };

std::string family_name(Family f);

enum class Metric {
  Lambda,
  Lambda2,
  Lambda3,
  Xi2,
  Xi3,
  Alpha,
  Mp,
  Mp1,
  SuperLambda,
  SuperLambda2,
  SuperLambda3,
  SuperMatched,
  CondSuperMatched,
  IsomorphicToStar,
};

std::string metric_name(Metric m);

// What the analysed statement asserts for one metric on one instance.
// NotStated marks a metric the statements do not cover for these
// parameters; the verifier may still attach a computed value to it.
struct Expectation {
  enum class Kind { NotStated, Int, Bool };
  Kind kind = Kind::NotStated;
  long long value = 0;
  bool truth = false;

  static Expectation not_stated() { return {}; }
  static Expectation of_int(long long v) {
    Expectation e;
    e.kind = Kind::Int;
    e.value = v;
    return e;
  }
  static Expectation of_bool(bool b) {
    Expectation e;
    e.kind = Kind::Bool;
    e.truth = b;
    return e;
  }
  std::string text() const;
};

struct ClaimRecord {
  std::string id;       // e.g. "dcell(2,2):lambda2"
  Family family = Family::DCell;
  int k = 0;            // DCell level; star second parameter; 0 for complete
  int n = 0;            // DCell n / star n' / complete-graph order
  Metric metric = Metric::Lambda;
  Expectation expected;
  std::string source;   // the statement being checked, in plain ASCII
  bool desk_verifiable = false;  // expected to evaluate under default budget
};

// Claim catalog for DCell D_{k,n} (k >= 0, n >= 2): one record per metric,
// NotStated where the statements do not cover the parameters.
std::vector<ClaimRecord> claims_for(int k, int n);

// Catalogs for the star graph S_{n,2} (n >= 3) and the complete graph K_n
// (n >= 2); only the metrics the statements address.
std::vector<ClaimRecord> star_claims(int n);
std::vector<ClaimRecord> complete_claims(int n);

enum class ClaimStatus { Pass, Fail, SkippedTooLarge, SkippedNotStated };

std::string status_name(ClaimStatus s);

struct EvaluatedClaim {
  ClaimRecord claim;
  ClaimStatus status = ClaimStatus::SkippedTooLarge;
  bool has_computed = false;
  std::string computed;      // computed value as text, when available
  std::string note;          // skip reason, evidence, or mismatch detail
  long long runtime_ms = 0;
  nlohmann::json witness;    // null, or a replayable witness object
};

struct PlanOptions {
  // DCell instances are all (k, n), k >= 1, with order t_{k,n} <= max_order.
  long long max_order = 500;
  // Adds D_{3,2} and raises the work cap (long sweeps, several minutes).
  bool slow = false;
  std::uint32_t seed = 20190402;
  long long claim_budget_ms = default_budget_ms();
  bool include_star_complete = true;
  // Non-empty: evaluate exactly these DCell (k, n) instances instead of the
  // max_order enumeration.
  std::vector<std::pair<int, int>> dcell_instances;
};

struct VerificationReport {
  std::vector<EvaluatedClaim> claims;  // sorted by claim id
  std::uint32_t seed = 0;
  bool slow = false;
  long long total_runtime_ms = 0;

  int count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::Fail) == 0; }
  nlohmann::json to_json() const;
  std::string to_table() const;
};

VerificationReport run_verification(const PlanOptions& opts = {});

// Replays every witness embedded in a report produced by to_json(): the
// instance graph is regenerated and cuts, boundaries, independent sets and
// preclusion sets are checked from scratch. Returns the number of witnesses
// validated; throws std::runtime_error naming the claim on the first bad one.
int revalidate_report(const nlohmann::json& report);

}  // namespace netrobust::claims
