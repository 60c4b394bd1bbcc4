#include "netrobust/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "netrobust/independence.hpp"
#include "netrobust/matching.hpp"
#include "netrobust/mincut.hpp"
#include "netrobust/restricted.hpp"
#include "netrobust/topology.hpp"

namespace netrobust::claims {

using nlohmann::json;

namespace {

// Work estimates in abstract units (roughly a few ns each). A claim whose
// estimate exceeds the cap is reported as skipped instead of being started;
// a per-claim deadline backstops the estimate.
constexpr double kDefaultUnitCap = 3e10;
constexpr double kSlowUnitCap = 1.5e12;
constexpr double kAttachUnitCap = 1.2e10;
constexpr double kMatchingTestUnits = 250.0;
constexpr double kInfUnits = 1e300;
constexpr long long kAlphaMaxOrder = 72;
constexpr std::uint64_t kAlphaNodeBudget = 200'000'000;

std::string int_text(long long v) { return std::to_string(v); }

double binom_sum(double m, int smax) {
  double total = 0.0;
  double c = 1.0;
  for (int s = 1; s <= smax; ++s) {
    c *= (m - (s - 1)) / s;
    if (c < 0) return total;
    total += c;
    if (total > 1e100) return 1e100;
  }
  return total;
}

double binom_one(double m, int s) {
  double c = 1.0;
  for (int i = 0; i < s; ++i) {
    c *= (m - i) / (i + 1);
    if (c < 0) return 0.0;
    if (c > 1e100) return 1e100;
  }
  return c;
}

struct CostInputs {
  long long t = 0;  // vertices
  long long m = 0;  // edges
  int r = 0;        // regular degree
  bool has_triangle = false;
};

double connected_sets_estimate(const CostInputs& in, int k) {
  const double t = static_cast<double>(in.t);
  const double r = in.r;
  switch (k) {
    case 1:
      return t;
    case 2:
      return static_cast<double>(in.m);
    case 3:
      return 1.4 * t * r * (r - 1) / 2.0;
    case 4:
      return 1.4 * t * r * r * r / 2.0;
    default:
      return kInfUnits;
  }
}

int xi_estimate(const CostInputs& in, int k) {
  if (k == 2) return 2 * in.r - 2;
  return in.has_triangle ? 3 * in.r - 6 : 3 * in.r - 4;
}

double lambda_sweep_units(const CostInputs& in, int k, int bound) {
  if (k == 1)
    return 2.0 * static_cast<double>(in.t) *
           static_cast<double>(in.t + 2 * in.m) * (in.r + 1);
  const double sets = connected_sets_estimate(in, k);
  if (sets > 250000.0) return kInfUnits;  // subset enumeration cap
  return 2.0 * (sets * sets / 2.0) * static_cast<double>(in.t + 2 * in.m) *
         (bound + 1);
}

int lambda_estimate(const CostInputs& in, int k) {
  if (k == 1) return in.r;
  if (k == 2) return 2 * in.r - 2;
  return in.has_triangle ? 3 * in.r - 6 : 3 * in.r - 4;
}

double units_for(Metric metric, const CostInputs& in, const Expectation& expected) {
  switch (metric) {
    case Metric::Lambda:
      return lambda_sweep_units(in, 1, in.r);
    case Metric::Lambda2:
      return lambda_sweep_units(in, 2, xi_estimate(in, 2));
    case Metric::Lambda3:
      return lambda_sweep_units(in, 3, xi_estimate(in, 3));
    case Metric::Xi2:
    case Metric::Xi3: {
      const int k = metric == Metric::Xi2 ? 2 : 3;
      const double sets = connected_sets_estimate(in, k);
      if (sets > 250000.0) return kInfUnits;
      return sets * in.r * 4.0 + static_cast<double>(in.t);
    }
    case Metric::Alpha:
      return in.t <= kAlphaMaxOrder ? 1e9 : kInfUnits;
    case Metric::Mp: {
      const int target = expected.kind == Expectation::Kind::Int
                             ? static_cast<int>(expected.value)
                             : in.r;
      return kMatchingTestUnits *
             (binom_sum(static_cast<double>(in.m), target - 1) + 16384.0);
    }
    case Metric::Mp1: {
      const int target = expected.kind == Expectation::Kind::Int
                             ? static_cast<int>(expected.value)
                             : (in.has_triangle ? 2 * in.r - 3 : 2 * in.r - 2);
      return kMatchingTestUnits *
             (binom_sum(static_cast<double>(in.m), target - 1) + 16384.0);
    }
    case Metric::SuperMatched: {
      const int target = in.r;
      return kMatchingTestUnits *
             (binom_sum(static_cast<double>(in.m), target - 1) +
              binom_one(static_cast<double>(in.m), target));
    }
    case Metric::CondSuperMatched: {
      const int target = in.has_triangle ? 2 * in.r - 3 : 2 * in.r - 2;
      return kMatchingTestUnits *
             (binom_sum(static_cast<double>(in.m), target - 1) +
              binom_one(static_cast<double>(in.m), target));
    }
    case Metric::SuperLambda:
    case Metric::SuperLambda2:
    case Metric::SuperLambda3: {
      const int k = metric == Metric::SuperLambda    ? 1
                    : metric == Metric::SuperLambda2 ? 2
                                                     : 3;
      const int bound = lambda_estimate(in, k);
      const double base = lambda_sweep_units(in, k, k == 1 ? in.r : xi_estimate(in, k));
      const double refute_sets = connected_sets_estimate(in, k + 1);
      if (base >= kInfUnits || refute_sets > 250000.0) return kInfUnits;
      const double per_pair = 2.0 * static_cast<double>(in.t + 2 * in.m) * (bound + 1);
      // A statement expecting "not super" is refuted by the first block that
      // contains a qualifying cut; expecting "super" forces a full sweep.
      const double pairs = (expected.kind == Expectation::Kind::Bool && !expected.truth)
                               ? 64.0 * refute_sets
                               : refute_sets * refute_sets / 2.0;
      return base + pairs * per_pair;
    }
    case Metric::IsomorphicToStar:
      return 1e6;
  }
  return kInfUnits;
}

std::string claim_id(Family family, int k, int n, Metric metric) {
  std::ostringstream os;
  os << family_name(family) << "(";
  if (family == Family::Complete)
    os << n;
  else if (family == Family::Star)
    os << n << "," << k;
  else
    os << k << "," << n;
  os << "):" << metric_name(metric);
  return os.str();
}

CostInputs dcell_cost_inputs(int k, int n) {
  CostInputs in;
  BigInt t = dcell_order(k, n);
  in.t = t > 1000000000 ? 1000000001 : t.convert_to<long long>();
  in.r = n + k - 1;
  in.m = in.t <= 1000000000 ? in.t * in.r / 2 : in.t;
  in.has_triangle = n >= 3;
  return in;
}

ClaimRecord make_claim(Family family, int k, int n, Metric metric,
                       Expectation expected, std::string source,
                       const CostInputs& in) {
  ClaimRecord c;
  c.id = claim_id(family, k, n, metric);
  c.family = family;
  c.k = k;
  c.n = n;
  c.metric = metric;
  c.expected = std::move(expected);
  c.source = std::move(source);
  c.desk_verifiable = in.t <= 100000 &&
                      units_for(metric, in, c.expected) <= kDefaultUnitCap;
  return c;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::DCell:
      return "dcell";
    case Family::Star:
      return "star";
    case Family::Complete:
      return "complete";
  }
  return "?";
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::Lambda:
      return "lambda";
    case Metric::Lambda2:
      return "lambda2";
    case Metric::Lambda3:
      return "lambda3";
    case Metric::Xi2:
      return "xi2";
    case Metric::Xi3:
      return "xi3";
    case Metric::Alpha:
      return "alpha";
    case Metric::Mp:
      return "mp";
    case Metric::Mp1:
      return "mp1";
    case Metric::SuperLambda:
      return "super_lambda";
    case Metric::SuperLambda2:
      return "super_lambda2";
    case Metric::SuperLambda3:
      return "super_lambda3";
    case Metric::SuperMatched:
      return "super_matched";
    case Metric::CondSuperMatched:
      return "cond_super_matched";
    case Metric::IsomorphicToStar:
      return "isomorphic_to_star";
  }
  return "?";
}

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "PASS";
    case ClaimStatus::Fail:
      return "FAIL";
    case ClaimStatus::SkippedTooLarge:
      return "SKIPPED-too-large";
    case ClaimStatus::SkippedNotStated:
      return "SKIPPED-not-stated";
  }
  return "?";
}

std::string Expectation::text() const {
  switch (kind) {
    case Kind::NotStated:
      return "not-stated";
    case Kind::Int:
      return int_text(value);
    case Kind::Bool:
      return truth ? "true" : "false";
  }
  return "?";
}

std::vector<ClaimRecord> claims_for(int k, int n) {
  if (k < 0 || n < 2)
    throw std::invalid_argument("claims_for: requires k >= 0 and n >= 2");
  const CostInputs in = dcell_cost_inputs(k, n);
  const auto ns = Expectation::not_stated();
  std::vector<ClaimRecord> out;
  auto add = [&](Metric metric, Expectation e, std::string src) {
    out.push_back(make_claim(Family::DCell, k, n, metric, std::move(e), std::move(src), in));
  };

  if (k == 0) {
    // D_{0,n} is the complete graph; the DCell statements address k >= 1.
    for (Metric m :
         {Metric::Lambda, Metric::Lambda2, Metric::Lambda3, Metric::Xi2, Metric::Xi3,
          Metric::Alpha, Metric::Mp, Metric::Mp1, Metric::SuperLambda,
          Metric::SuperLambda2, Metric::SuperLambda3, Metric::SuperMatched,
          Metric::CondSuperMatched, Metric::IsomorphicToStar})
      add(m, ns, "");
    return out;
  }

  add(Metric::Lambda, Expectation::of_int(n + k - 1),
      "lambda(D_{k,n}) = n+k-1");

  if (k >= 2)
    add(Metric::Lambda2, Expectation::of_int(2 * n + 2 * k - 4),
        "lambda_2(D_{k,n}) = 2n+2k-4 for n >= 2 and k >= 2");
  else
    add(Metric::Lambda2, ns, "");

  if (n >= 3 && k >= 3)
    add(Metric::Lambda3, Expectation::of_int(3 * n + 3 * k - 9),
        "lambda_3(D_{k,n}) = 3n+3k-9 for n >= 3 and k >= 3");
  else if (n == 2 && k >= 2)
    add(Metric::Lambda3, Expectation::of_int(3 * k - 1),
        "lambda_3(D_{k,2}) = 3n+3k-7 for k >= 2");
  else
    add(Metric::Lambda3, ns, "");

  if (k >= 2)
    add(Metric::Xi2, Expectation::of_int(2 * n + 2 * k - 4),
        "xi_2(D_{k,n}) = 2n+2k-4 since D_{k,n} is (n+k-1)-regular");
  else
    add(Metric::Xi2, ns, "");

  if (n >= 3 && k >= 3)
    add(Metric::Xi3, Expectation::of_int(3 * n + 3 * k - 9),
        "a 2-path P and triangle C of D_{k,n} give min{|[V(P),-]|,|[V(C),-]|} "
        "= 3n+3k-9 for n >= 3, k >= 3");
  else if (n == 2 && k >= 2)
    add(Metric::Xi3, Expectation::of_int(3 * k - 1),
        "a 2-path P of the triangle-free D_{k,2} gives |[V(P),-]| = 3n+3k-7 "
        "for k >= 2");
  else
    add(Metric::Xi3, ns, "");

  if (k == 2 && n == 2)
    add(Metric::Alpha, Expectation::of_int(19), "alpha(D_{2,2}) = 19");
  else
    add(Metric::Alpha, ns, "");

  if (k == 1 && n >= 3)
    add(Metric::Mp, Expectation::of_int(n), "mp(D_{1,n}) = n for n >= 3");
  else if (k >= 2)
    add(Metric::Mp, Expectation::of_int(n + k - 1),
        "mp(D_{k,n}) = n+k-1 for k >= 2 and n >= 2");
  else
    add(Metric::Mp, ns, "");

  if (k >= 3 && n >= 3)
    add(Metric::Mp1, Expectation::of_int(2 * n + 2 * k - 5),
        "mp_1(D_{k,n}) = 2n+2k-5 for k >= 3 and n >= 3");
  else if (n == 2 && k >= 2)
    add(Metric::Mp1, Expectation::of_int(2 * n + 2 * k - 4),
        "mp_1(D_{k,2}) = 2n+2k-4 for k >= 2");
  else
    add(Metric::Mp1, ns, "");

  if (k == 1)
    add(Metric::SuperLambda, Expectation::of_bool(false),
        "the edges leaving a complete subgraph K_n form a non-trivial "
        "minimum edge-cut, so D_{1,n} is not super-lambda for n >= 2");
  else
    add(Metric::SuperLambda, Expectation::of_bool(true),
        "D_{k,n} is super-lambda for all k >= 2 and n >= 2");

  if (k == 1)
    add(Metric::SuperLambda2, Expectation::of_bool(false),
        "D_{1,n} has a non-trivial restricted edge-cut, hence is not "
        "super-lambda_2 for all n >= 2");
  else if (k == 2 && n == 2)
    add(Metric::SuperLambda2, Expectation::of_bool(true), "D_{2,2} is super-lambda_2");
  else if (k == 2)
    add(Metric::SuperLambda2, Expectation::of_bool(false),
        "D_{2,n} is not super-lambda_2 when n >= 3: the edges leaving a K_n "
        "form a non-trivial minimum restricted edge-cut");
  else
    add(Metric::SuperLambda2, Expectation::of_bool(true),
        "D_{k,n} is super-lambda_2 for k >= 3 and n >= 2, or k = 2 and n = 2");

  if (k >= 4 && n >= 3)
    add(Metric::SuperLambda3, Expectation::of_bool(true),
        "D_{k,n} is super-lambda_3 for all k >= 4 and n >= 3");
  else if (n == 2 && k >= 2)
    add(Metric::SuperLambda3, Expectation::of_bool(true),
        "D_{k,2} is super-lambda_3 for all k >= 2");
  else if (k == 3 && n >= 4)
    add(Metric::SuperLambda3, Expectation::of_bool(false),
        "D_{3,n} is not super-lambda_3 when n >= 4: the edges leaving a K_n "
        "form a non-trivial minimum 3-restricted edge-cut");
  else
    add(Metric::SuperLambda3, ns, "");

  if (k == 1 && n == 2)
    add(Metric::SuperMatched, Expectation::of_bool(false),
        "D_{1,2} is a 6-cycle and is not super matched");
  else if (k == 1 && n >= 3)
    add(Metric::SuperMatched, Expectation::of_bool(n % 2 == 0),
        "for n >= 3, D_{1,n} is super matched iff n is even; for odd n the "
        "optimal solutions are exactly the trivial and semi-trivial sets");
  else
    add(Metric::SuperMatched, Expectation::of_bool(true),
        "D_{k,n} is super matched for k >= 2 and n >= 2");

  if (k >= 4 && n >= 3)
    add(Metric::CondSuperMatched, Expectation::of_bool(true),
        "D_{k,n} is conditionally super matched for k >= 4 and n >= 3");
  else if (k >= 3 && n == 2)
    add(Metric::CondSuperMatched, Expectation::of_bool(true),
        "D_{k,2} is conditionally super matched for k >= 3");
  else
    add(Metric::CondSuperMatched, ns, "");

  if (k == 1)
    add(Metric::IsomorphicToStar, Expectation::of_bool(true),
        "D_{1,n} is isomorphic to S_{n+1,2}");
  else
    add(Metric::IsomorphicToStar, Expectation::of_bool(false),
        "D_{k,n} is not vertex-transitive for k >= 2 while (n,k)-star graphs "
        "are, so D_{k,n} is not isomorphic to S_{n+1,k+1} for k >= 2");

  return out;
}

std::vector<ClaimRecord> star_claims(int n) {
  if (n < 3) throw std::invalid_argument("star_claims: requires n >= 3");
  CostInputs in;
  in.t = static_cast<long long>(n) * (n - 1);
  in.r = n - 1;
  in.m = in.t * in.r / 2;
  in.has_triangle = n >= 4;
  std::vector<ClaimRecord> out;
  auto add = [&](Metric metric, Expectation e, std::string src) {
    out.push_back(make_claim(Family::Star, 2, n, metric, std::move(e), std::move(src), in));
  };
  if (n >= 4)
    add(Metric::Mp, Expectation::of_int(n - 1), "mp(S_{n,2}) = n-1 for n >= 4");
  else
    add(Metric::Mp, Expectation::not_stated(), "");
  if (n >= 4)
    add(Metric::SuperMatched, Expectation::of_bool(n % 2 == 1),
        "for n >= 4, S_{n,2} is super matched iff n is odd; for even n the "
        "optimal solutions are exactly the trivial and semi-trivial sets");
  else
    add(Metric::SuperMatched, Expectation::not_stated(), "");
  return out;
}

std::vector<ClaimRecord> complete_claims(int n) {
  if (n < 2) throw std::invalid_argument("complete_claims: requires n >= 2");
  CostInputs in;
  in.t = n;
  in.r = n - 1;
  in.m = static_cast<long long>(n) * (n - 1) / 2;
  in.has_triangle = n >= 3;
  std::vector<ClaimRecord> out;
  auto add = [&](Metric metric, Expectation e, std::string src) {
    out.push_back(make_claim(Family::Complete, 0, n, metric, std::move(e), std::move(src), in));
  };
  if (n >= 4)
    add(Metric::Lambda2, Expectation::of_int(2 * n - 4),
        "lambda_2(K_n) = 2n-4 when n >= 4");
  else
    add(Metric::Lambda2, Expectation::not_stated(), "");
  if (n >= 6)
    add(Metric::Lambda3, Expectation::of_int(3 * n - 9),
        "lambda_3(K_n) = 3n-9 when n >= 6");
  else
    add(Metric::Lambda3, Expectation::not_stated(), "");
  if (n >= 4)
    add(Metric::SuperLambda2, Expectation::of_bool(true),
        "the complete graph K_n is super-lambda_2 for n >= 4");
  else
    add(Metric::SuperLambda2, Expectation::not_stated(), "");
  if (n >= 6)
    add(Metric::SuperLambda3, Expectation::of_bool(true),
        "the complete graph K_n is super-lambda_3 for n >= 6");
  else
    add(Metric::SuperLambda3, Expectation::not_stated(), "");
  add(Metric::Alpha, Expectation::of_int(1), "alpha(K_n) = 1");
  return out;
}

namespace {

json edge_array(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back(json::array({e.u, e.v}));
  return a;
}

json cut_witness_json(const CutWitness& w, int min_component, int size) {
  json j;
  j["type"] = "cut";
  j["edges"] = edge_array(w.cut_edges);
  j["component_sizes"] = w.component_sizes;
  j["min_component"] = min_component;
  j["size"] = size;
  return j;
}

json preclusion_witness_json(const std::vector<Edge>& edges, bool conditional,
                             int size, const std::string& kind) {
  json j;
  j["type"] = "preclusion";
  j["edges"] = edge_array(edges);
  j["conditional"] = conditional;
  j["size"] = size;
  j["kind"] = kind;
  return j;
}

// Outcome of actually computing a metric: either a value (text plus
// optional witness) or a reason the computation could not decide.
struct Computed {
  bool ok = false;
  std::string text;
  std::string note;
  json witness;  // null unless replayable
};

Computed computed_value(std::string text, json witness = json(), std::string note = "") {
  Computed c;
  c.ok = true;
  c.text = std::move(text);
  c.witness = std::move(witness);
  c.note = std::move(note);
  return c;
}

Computed computed_undecided(std::string note) {
  Computed c;
  c.note = std::move(note);
  return c;
}

long long permutation_count_capped(int n, int k, long long cap) {
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    v *= (n - i);
    if (v > cap || v <= 0) return cap + 1;
  }
  return v;
}

struct InstanceCtx {
  Family family = Family::DCell;
  int k = 0;
  int n = 0;
  Graph g;
  CostInputs cost;
  long long claim_budget_ms = 0;

  std::optional<ConnectivityResult> lambda1;
  std::optional<LadderResult> lambda2, lambda3;
  std::optional<SuperStatus> super1, super2, super3;
  std::optional<MatchedStatus> matched, cond_matched;

  Deadline fresh_deadline() const { return Deadline::after_ms(claim_budget_ms); }
  SweepLimits sweep_limits() const {
    SweepLimits lim;
    lim.max_subsets = 250000;
    lim.max_pairs = 2'000'000'000LL;
    lim.deadline = fresh_deadline();
    return lim;
  }
  MatchingLimits matching_limits() const {
    MatchingLimits lim;
    lim.max_tests = 2'000'000'000ULL;
    lim.max_witnesses = 200000;
    lim.deadline = fresh_deadline();
    return lim;
  }
};

const LadderResult& ladder_for(InstanceCtx& ctx, int k) {
  std::optional<LadderResult>& slot = k == 2 ? ctx.lambda2 : ctx.lambda3;
  if (!slot) slot = lambda_k(ctx.g, k, ctx.sweep_limits());
  return *slot;
}

Computed compute_lambda(InstanceCtx& ctx) {
  if (!ctx.lambda1) ctx.lambda1 = edge_connectivity(ctx.g);
  const ConnectivityResult& r = *ctx.lambda1;
  return computed_value(int_text(r.value),
                        cut_witness_json(r.witness, 1, r.value));
}

Computed compute_lambda_k(InstanceCtx& ctx, int k) {
  const LadderResult& L = ladder_for(ctx, k);
  if (!L.defined) return computed_value("undefined");
  return computed_value(int_text(L.value), cut_witness_json(L.witness, k, L.value));
}

Computed compute_xi(InstanceCtx& ctx, int k) {
  XiResult x = xi_k(ctx.g, k, 250000);
  json w;
  w["type"] = "boundary";
  w["set"] = x.witness;
  w["value"] = x.value;
  return computed_value(int_text(x.value), std::move(w));
}

Computed compute_alpha(InstanceCtx& ctx) {
  AlphaResult a = independence_number(ctx.g, kAlphaNodeBudget, ctx.fresh_deadline());
  json w;
  w["type"] = "independent_set";
  w["vertices"] = a.witness;
  w["size"] = a.alpha;
  return computed_value(int_text(a.alpha), std::move(w));
}

Computed compute_preclusion(InstanceCtx& ctx, bool conditional) {
  PreclusionResult r = conditional
                           ? mp1_number(ctx.g, false, ctx.matching_limits())
                           : mp_number(ctx.g, false, ctx.matching_limits());
  if (!r.defined) return computed_value("undefined");
  json w;
  if (!r.witnesses.empty()) {
    const PreclusionWitness& pw = r.witnesses.front();
    w = preclusion_witness_json(pw.edges, conditional, r.number,
                                preclusion_kind_name(pw.kind));
  }
  return computed_value(int_text(r.number), std::move(w));
}

Computed compute_super_lambda(InstanceCtx& ctx, int k) {
  // The ladder value must exist for the property to be decidable.
  if (k == 1) {
    if (!ctx.lambda1) ctx.lambda1 = edge_connectivity(ctx.g);
  } else {
    const LadderResult& L = ladder_for(ctx, k);
    if (!L.defined) return computed_value("undefined");
  }
  std::optional<SuperStatus>& slot =
      k == 1 ? ctx.super1 : (k == 2 ? ctx.super2 : ctx.super3);
  if (!slot) slot = classify_super_lambda_k(ctx.g, k, ctx.sweep_limits());
  const SuperStatus& s = *slot;
  if (s.verdict == Verdict::Proven) return computed_value("true", json(), s.evidence);
  if (s.verdict == Verdict::Refuted) {
    int size = static_cast<int>(s.counterexample.cut_edges.size());
    return computed_value("false", cut_witness_json(s.counterexample, k + 1, size),
                          s.evidence);
  }
  return computed_undecided(s.evidence);
}

Computed compute_matched_status(InstanceCtx& ctx, bool conditional) {
  std::optional<MatchedStatus>& slot = conditional ? ctx.cond_matched : ctx.matched;
  if (!slot) {
    try {
      slot = conditional ? cond_super_matched_status(ctx.g, ctx.matching_limits())
                         : super_matched_status(ctx.g, ctx.matching_limits());
    } catch (const std::invalid_argument& e) {
      return computed_undecided(e.what());
    }
  }
  const MatchedStatus& s = *slot;
  if (s.verdict == Verdict::Proven) return computed_value("true", json(), s.evidence);
  if (s.verdict == Verdict::Refuted) {
    std::string kind = preclusion_kind_name(
        classify_preclusion_set(ctx.g, s.counterexample, conditional));
    return computed_value(
        "false",
        preclusion_witness_json(s.counterexample, conditional,
                                static_cast<int>(s.counterexample.size()), kind),
        s.evidence);
  }
  return computed_undecided(s.evidence);
}

Computed compute_isomorphic_to_star(InstanceCtx& ctx) {
  if (ctx.family != Family::DCell)
    return computed_undecided("star-isomorphism applies to DCell instances");
  const long long star_order =
      permutation_count_capped(ctx.n + 1, ctx.k + 1, 4'000'000'000'000LL);
  if (star_order != ctx.cost.t)
    return computed_value("false", json(),
                          "orders differ: " + int_text(ctx.cost.t) + " vs " +
                              int_text(star_order));
  if (ctx.k != 1)
    return computed_undecided(
        "equal orders but no canonical bijection to test at this level");
  Graph h = gen_star(ctx.n + 1, 2);
  VertexMap map = dcell_star_map(ctx.n);
  bool ok = check_adjacency_preserving(ctx.g, h, map);
  return computed_value(ok ? "true" : "false", json(),
                        ok ? "adjacency-preserving bijection verified" : "");
}

Computed compute_metric(InstanceCtx& ctx, Metric metric) {
  switch (metric) {
    case Metric::Lambda:
      return compute_lambda(ctx);
    case Metric::Lambda2:
      return compute_lambda_k(ctx, 2);
    case Metric::Lambda3:
      return compute_lambda_k(ctx, 3);
    case Metric::Xi2:
      return compute_xi(ctx, 2);
    case Metric::Xi3:
      return compute_xi(ctx, 3);
    case Metric::Alpha:
      return compute_alpha(ctx);
    case Metric::Mp:
      return compute_preclusion(ctx, false);
    case Metric::Mp1:
      return compute_preclusion(ctx, true);
    case Metric::SuperLambda:
      return compute_super_lambda(ctx, 1);
    case Metric::SuperLambda2:
      return compute_super_lambda(ctx, 2);
    case Metric::SuperLambda3:
      return compute_super_lambda(ctx, 3);
    case Metric::SuperMatched:
      return compute_matched_status(ctx, false);
    case Metric::CondSuperMatched:
      return compute_matched_status(ctx, true);
    case Metric::IsomorphicToStar:
      return compute_isomorphic_to_star(ctx);
  }
  return computed_undecided("unknown metric");
}

bool computed_matches(const Expectation& expected, const std::string& text) {
  switch (expected.kind) {
    case Expectation::Kind::Int:
      return text == int_text(expected.value);
    case Expectation::Kind::Bool:
      return text == (expected.truth ? "true" : "false");
    case Expectation::Kind::NotStated:
      return true;
  }
  return false;
}

EvaluatedClaim evaluate_claim(InstanceCtx& ctx, const ClaimRecord& claim,
                              double unit_cap) {
  EvaluatedClaim out;
  out.claim = claim;
  const bool stated = claim.expected.kind != Expectation::Kind::NotStated;
  const double budget = stated ? unit_cap : kAttachUnitCap;
  const double units = units_for(claim.metric, ctx.cost, claim.expected);
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&]() {
    out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  };

  if (units > budget) {
    out.status = stated ? ClaimStatus::SkippedTooLarge : ClaimStatus::SkippedNotStated;
    if (units >= kInfUnits) {
      out.note = "search space exceeds the enumeration caps";
    } else {
      std::ostringstream os;
      os << "estimated work " << std::scientific << units << " units exceeds the "
         << (stated ? "evaluation" : "attach") << " budget";
      out.note = os.str();
    }
    finish();
    return out;
  }

  Computed c;
  try {
    c = compute_metric(ctx, claim.metric);
  } catch (const CapExceeded& e) {
    c = computed_undecided(e.what());
  } catch (const BudgetExceeded& e) {
    c = computed_undecided(e.what());
  }
  finish();

  if (!c.ok) {
    out.status = stated ? ClaimStatus::SkippedTooLarge : ClaimStatus::SkippedNotStated;
    out.note = c.note;
    return out;
  }
  out.has_computed = true;
  out.computed = c.text;
  out.witness = std::move(c.witness);
  out.note = c.note;
  if (!stated) {
    out.status = ClaimStatus::SkippedNotStated;
  } else if (computed_matches(claim.expected, c.text)) {
    out.status = ClaimStatus::Pass;
  } else {
    out.status = ClaimStatus::Fail;
    out.note = "expected " + claim.expected.text() + " but computed " + c.text +
               (c.note.empty() ? "" : "; " + c.note);
  }
  return out;
}

Graph instance_graph(Family family, int k, int n) {
  switch (family) {
    case Family::DCell:
      return gen_dcell(k, n);
    case Family::Star:
      return gen_star(n, 2);
    case Family::Complete:
      return complete_graph(n);
  }
  throw std::logic_error("instance_graph: bad family");
}

struct PlannedInstance {
  Family family;
  int k;
  int n;
};

std::vector<PlannedInstance> plan_instances(const PlanOptions& opts) {
  std::vector<PlannedInstance> out;
  if (!opts.dcell_instances.empty()) {
    for (auto [k, n] : opts.dcell_instances) out.push_back({Family::DCell, k, n});
  } else {
    for (int k = 1;; ++k) {
      if (dcell_order(k, 2) > opts.max_order) break;
      for (int n = 2;; ++n) {
        if (dcell_order(k, n) > opts.max_order) break;
        out.push_back({Family::DCell, k, n});
      }
    }
    if (opts.slow) out.push_back({Family::DCell, 3, 2});
  }
  if (opts.include_star_complete) {
    for (int n = 3; n <= 8; ++n) out.push_back({Family::Star, 2, n});
    for (int n = 2; n <= 8; ++n) out.push_back({Family::Complete, 0, n});
  }
  return out;
}

}  // namespace

int VerificationReport::count(ClaimStatus s) const {
  int c = 0;
  for (const EvaluatedClaim& e : claims)
    if (e.status == s) ++c;
  return c;
}

VerificationReport run_verification(const PlanOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const double unit_cap = opts.slow ? kSlowUnitCap : kDefaultUnitCap;
  VerificationReport report;
  report.seed = opts.seed;
  report.slow = opts.slow;

  for (const PlannedInstance& inst : plan_instances(opts)) {
    std::vector<ClaimRecord> records;
    switch (inst.family) {
      case Family::DCell:
        records = claims_for(inst.k, inst.n);
        break;
      case Family::Star:
        records = star_claims(inst.n);
        break;
      case Family::Complete:
        records = complete_claims(inst.n);
        break;
    }

    InstanceCtx ctx;
    ctx.family = inst.family;
    ctx.k = inst.k;
    ctx.n = inst.n;
    ctx.claim_budget_ms = opts.claim_budget_ms;
    bool built = false;
    std::string build_note;
    try {
      ctx.g = instance_graph(inst.family, inst.k, inst.n);
      built = true;
    } catch (const CapExceeded& e) {
      build_note = e.what();
    }
    if (built) {
      ctx.cost.t = ctx.g.vertex_count();
      ctx.cost.m = ctx.g.edge_count();
      ctx.cost.r = basic_stats(ctx.g).max_degree;
      ctx.cost.has_triangle = !basic_stats(ctx.g).triangle_free;
    }

    for (const ClaimRecord& rec : records) {
      if (!built) {
        EvaluatedClaim out;
        out.claim = rec;
        out.status = rec.expected.kind == Expectation::Kind::NotStated
                         ? ClaimStatus::SkippedNotStated
                         : ClaimStatus::SkippedTooLarge;
        out.note = "instance not generated: " + build_note;
        report.claims.push_back(std::move(out));
        continue;
      }
      report.claims.push_back(evaluate_claim(ctx, rec, unit_cap));
    }
  }

  std::sort(report.claims.begin(), report.claims.end(),
            [](const EvaluatedClaim& a, const EvaluatedClaim& b) {
              return a.claim.id < b.claim.id;
            });
  report.total_runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

namespace {

json typed_value(const Expectation& e) {
  switch (e.kind) {
    case Expectation::Kind::NotStated:
      return json("not-stated");
    case Expectation::Kind::Int:
      return json(e.value);
    case Expectation::Kind::Bool:
      return json(e.truth);
  }
  return json();
}

json typed_computed(const std::string& text) {
  if (text == "true") return json(true);
  if (text == "false") return json(false);
  if (!text.empty() &&
      text.find_first_not_of("0123456789-") == std::string::npos)
    return json(std::stoll(text));
  return json(text);
}

}  // namespace

json VerificationReport::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["tool"] = "netrobust";
  j["tool_version"] = "0.1.0";
  j["seed"] = seed;
  j["slow"] = slow;
  j["summary"] = {
      {"claims", claims.size()},
      {"pass", count(ClaimStatus::Pass)},
      {"fail", count(ClaimStatus::Fail)},
      {"skipped_too_large", count(ClaimStatus::SkippedTooLarge)},
      {"skipped_not_stated", count(ClaimStatus::SkippedNotStated)},
      {"total_runtime_ms", total_runtime_ms},
  };
  json arr = json::array();
  for (const EvaluatedClaim& e : claims) {
    json c;
    c["claim_id"] = e.claim.id;
    c["family"] = family_name(e.claim.family);
    c["params"] = {{"k", e.claim.k}, {"n", e.claim.n}};
    c["metric"] = metric_name(e.claim.metric);
    c["expected"] = typed_value(e.claim.expected);
    if (e.has_computed) c["computed"] = typed_computed(e.computed);
    c["status"] = status_name(e.status);
    c["runtime_ms"] = e.runtime_ms;
    c["desk_verifiable"] = e.claim.desk_verifiable;
    if (!e.claim.source.empty()) c["source"] = e.claim.source;
    if (!e.note.empty()) c["note"] = e.note;
    if (!e.witness.is_null()) c["witness"] = e.witness;
    arr.push_back(std::move(c));
  }
  j["claims"] = std::move(arr);
  return j;
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("CLAIM", 36) << pad("EXPECTED", 12) << pad("COMPUTED", 12)
     << pad("STATUS", 20) << pad("MS", 8) << "NOTE\n";
  for (const EvaluatedClaim& e : claims) {
    std::string note = e.note;
    if (note.size() > 60) note = note.substr(0, 57) + "...";
    os << pad(e.claim.id, 36) << pad(e.claim.expected.text(), 12)
       << pad(e.has_computed ? e.computed : "-", 12)
       << pad(status_name(e.status), 20) << pad(std::to_string(e.runtime_ms), 8)
       << note << "\n";
  }
  os << "summary: " << count(ClaimStatus::Pass) << " pass, "
     << count(ClaimStatus::Fail) << " fail, " << count(ClaimStatus::SkippedTooLarge)
     << " skipped-too-large, " << count(ClaimStatus::SkippedNotStated)
     << " skipped-not-stated (" << total_runtime_ms << " ms)\n";
  return os.str();
}

namespace {

Family parse_family(const std::string& name) {
  if (name == "dcell") return Family::DCell;
  if (name == "star") return Family::Star;
  if (name == "complete") return Family::Complete;
  throw std::runtime_error("revalidate_report: unknown family " + name);
}

std::vector<Edge> parse_edges(const json& arr, const Graph& g, const std::string& id) {
  std::vector<Edge> out;
  for (const json& item : arr) {
    int u = item.at(0).get<int>();
    int v = item.at(1).get<int>();
    if (u > v) std::swap(u, v);
    if (g.edge_index(u, v) < 0)
      throw std::runtime_error("revalidate_report: " + id +
                               ": witness edge not in the graph");
    out.push_back(Edge{u, v});
  }
  return out;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::vector<Edge> keep;
  keep.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    bool dropped = false;
    for (const Edge& r : removed)
      if (r.u == e.u && r.v == e.v) {
        dropped = true;
        break;
      }
    if (!dropped) keep.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(keep));
}

}  // namespace

int revalidate_report(const json& report) {
  int checked = 0;
  for (const json& c : report.at("claims")) {
    if (!c.contains("witness") || c.at("witness").is_null()) continue;
    const std::string id = c.at("claim_id").get<std::string>();
    const json& w = c.at("witness");
    const Family family = parse_family(c.at("family").get<std::string>());
    const int k = c.at("params").at("k").get<int>();
    const int n = c.at("params").at("n").get<int>();
    Graph g = instance_graph(family, k, n);
    const std::string type = w.at("type").get<std::string>();

    if (type == "cut") {
      std::vector<Edge> cut = parse_edges(w.at("edges"), g, id);
      if (static_cast<int>(cut.size()) != w.at("size").get<int>())
        throw std::runtime_error("revalidate_report: " + id + ": cut size mismatch");
      Graph rest = remove_edges(g, cut);
      std::vector<std::vector<int>> comps = components(rest);
      if (comps.size() < 2)
        throw std::runtime_error("revalidate_report: " + id +
                                 ": cut does not disconnect the graph");
      const int floor = w.at("min_component").get<int>();
      std::vector<int> sizes;
      for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) < floor)
          throw std::runtime_error("revalidate_report: " + id +
                                   ": component below the required order");
        sizes.push_back(static_cast<int>(comp.size()));
      }
      std::sort(sizes.begin(), sizes.end(), std::greater<int>());
      std::vector<int> claimed = w.at("component_sizes").get<std::vector<int>>();
      std::sort(claimed.begin(), claimed.end(), std::greater<int>());
      if (sizes != claimed)
        throw std::runtime_error("revalidate_report: " + id +
                                 ": component sizes do not match");
    } else if (type == "boundary") {
      std::vector<int> set = w.at("set").get<std::vector<int>>();
      std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
      for (int v : set) in_set[static_cast<std::size_t>(v)] = 1;
      int boundary = 0;
      for (const Edge& e : g.edges())
        boundary += in_set[static_cast<std::size_t>(e.u)] !=
                    in_set[static_cast<std::size_t>(e.v)];
      if (boundary != w.at("value").get<int>())
        throw std::runtime_error("revalidate_report: " + id +
                                 ": boundary size mismatch");
    } else if (type == "independent_set") {
      std::vector<int> set = w.at("vertices").get<std::vector<int>>();
      if (static_cast<int>(set.size()) != w.at("size").get<int>())
        throw std::runtime_error("revalidate_report: " + id +
                                 ": independent set size mismatch");
      for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
          if (g.has_edge(set[i], set[j]))
            throw std::runtime_error("revalidate_report: " + id +
                                     ": witness set is not independent");
    } else if (type == "preclusion") {
      std::vector<Edge> set = parse_edges(w.at("edges"), g, id);
      if (static_cast<int>(set.size()) != w.at("size").get<int>())
        throw std::runtime_error("revalidate_report: " + id +
                                 ": preclusion set size mismatch");
      const bool conditional = w.at("conditional").get<bool>();
      Graph rest = remove_edges(g, set);
      if (conditional)
        for (int v = 0; v < rest.vertex_count(); ++v)
          if (rest.degree(v) == 0)
            throw std::runtime_error("revalidate_report: " + id +
                                     ": conditional witness isolates a vertex");
      if (has_perfect_matching(rest))
        throw std::runtime_error("revalidate_report: " + id +
                                 ": remainder still has a perfect matching");
      const std::string kind =
          preclusion_kind_name(classify_preclusion_set(g, set, conditional));
      if (kind != w.at("kind").get<std::string>())
        throw std::runtime_error("revalidate_report: " + id +
                                 ": preclusion kind mismatch");
    } else {
      throw std::runtime_error("revalidate_report: " + id +
                               ": unknown witness type " + type);
    }
    ++checked;
  }
  return checked;
}

}  // namespace netrobust::claims
