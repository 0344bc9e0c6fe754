// Acceptance suite: one criterion per run_criterion call, one PASS/FAIL line
// each, nonzero exit if anything fails. Tolerances are exact/zero-tolerance
// throughout; runtimes are reported for information.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/rewrite_oracle.hpp"
#include "zek/enumerate.hpp"
#include "zek/knot.hpp"
#include "zek/rhd.hpp"
#include "zek/term.hpp"

namespace {

int g_failures = 0;

void run_criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("%s %s (%s, %lld ms)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
              static_cast<long long>(ms));
  if (!ok) ++g_failures;
}

zek::EnumCaps acceptance_caps() {
  zek::EnumCaps caps;
  caps.max_p = 5;
  caps.max_q = 5;
  caps.max_branch = 4;
  return caps;
}

}  // namespace

int main() {
  using zek::Knot;

  // Shared enumeration for the two class-invariant criteria: depth 3,
  // caps p,q <= 5, branching <= 4.
  std::vector<zek::InvariantReport> reports;
  zek::EnumStats enum_stats = zek::enumerate_links(
      3, acceptance_caps(),
      [&](const zek::LinkTerm&, const zek::Link& l) { reports.push_back(check_invariants(l)); });

  run_criterion("unknot-pair", [&](std::string& detail) {
    std::size_t bad = 0;
    for (const auto& r : reports)
      if (!r.unknot_pair) ++bad;
    std::ostringstream os;
    os << reports.size() << " links enumerated at depth 3, p,q <= 5, branch 4; " << bad
       << " without an unknotted pair";
    detail = os.str();
    return bad == 0 && !reports.empty();
  });

  run_criterion("index-presence", [&](std::string& detail) {
    std::size_t bad = 0;
    for (const auto& r : reports)
      if (!r.index0_present || !r.index2_present) ++bad;
    std::ostringstream os;
    os << reports.size() << " links checked; " << bad << " missing an index-0 or index-2 component";
    detail = os.str();
    return bad == 0 && !reports.empty();
  });

  run_criterion("canonicalization", [&](std::string& detail) {
    std::mt19937_64 rng(0xACCE97);
    std::size_t idempotence_bad = 0, confluence_bad = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      Knot k = zek::testing::random_raw_knot(rng, 6, 9);
      Knot c = zek::canonicalize(k);
      if (!zek::identical(zek::canonicalize(c), c) || !zek::is_canonical(c)) ++idempotence_bad;
      if (!zek::identical(zek::testing::slow_canonicalize(k, rng), c)) ++confluence_bad;
    }
    std::ostringstream os;
    os << trials << " random trees (depth <= 6, parameters <= 9); " << idempotence_bad
       << " idempotence and " << confluence_bad << " rule-order disagreements";
    detail = os.str();
    return idempotence_bad == 0 && confluence_bad == 0;
  });

  run_criterion("genus-oracle", [&](std::string& detail) {
    std::size_t checked = 0, bad = 0;
    for (long long p = 2; p <= 7; ++p) {
      for (long long q = p; q <= 7; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++checked;
        Knot t = zek::cable(p, q, Knot::make_unknot());
        long long formula = zek::genus(t);
        long long oracle = zek::testing::genus_oracle(t);
        if (formula != (p - 1) * (q - 1) / 2 || formula != oracle) ++bad;
      }
    }
    std::ostringstream os;
    os << checked << " torus knots T(p,q), 2 <= p <= q <= 7; " << bad
       << " Alexander-degree disagreements";
    detail = os.str();
    return bad == 0 && checked > 0;
  });

  run_criterion("prime-factorization", [&](std::string& detail) {
    std::mt19937_64 rng(0xFAC7);
    std::size_t bad = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      Knot k = zek::testing::random_canonical_knot(rng);
      Knot rebuilt = Knot::make_unknot();
      for (const Knot& f : zek::prime_factors(k)) {
        if (!zek::is_prime(f)) ++bad;
        rebuilt = zek::connected_sum(rebuilt, f);
      }
      if (!zek::identical(rebuilt, k)) ++bad;
      if (k.kind() == Knot::Kind::cable && !zek::is_prime(k)) ++bad;
      if (k.kind() == Knot::Kind::sum && zek::is_prime(k)) ++bad;
    }
    std::ostringstream os;
    os << trials << " random canonical knots; " << bad << " round-trip or primality failures";
    detail = os.str();
    return bad == 0;
  });

  run_criterion("mobius-core-extraction", [&](std::string& detail) {
    std::size_t bad = 0;
    for (long long n = 1; n <= 10; ++n) {
      zek::StratifiedSet s = zek::seifert_example(n);
      Knot expected_boundary = zek::cable(2, 2 * n + 1, Knot::make_unknot());
      for (const auto& circle : s.one_strata) {
        if (!zek::identical(zek::canonicalize(circle.knot), expected_boundary)) ++bad;
        if (!zek::is_unknot(zek::mobius_core_knot(circle.knot))) ++bad;
      }
    }
    detail = "n = 1..10: boundaries T(2,2n+1), extracted cores unknotted";
    return bad == 0;
  });

  run_criterion("rhd-structure", [&](std::string& detail) {
    std::mt19937_64 rng(0x0D1);
    std::size_t bad = 0;
    const int trials = 100;
    for (int i = 0; i < trials; ++i) {
      zek::StratifiedSet s = zek::testing::random_stratification(rng);
      zek::RHDPlan plan = zek::build_rhd(s);
      if (plan.handles.size() !=
          s.one_strata.size() + s.two_strata.size() + s.exterior_tori.size())
        ++bad;
      for (std::size_t h = 0; h + 1 < plan.handles.size(); ++h)
        if (plan.handles[h].index > plan.handles[h + 1].index) ++bad;
      std::map<int, std::size_t> plan_hist, link_hist;
      for (const auto& h : plan.handles) ++plan_hist[h.index];
      for (const auto& c : zek::cores_link(plan).components()) ++link_hist[c.index];
      if (plan_hist != link_hist) ++bad;
    }
    std::ostringstream os;
    os << trials << " randomized torus-free stratifications; " << bad << " structural failures";
    detail = os.str();
    return bad == 0;
  });

  run_criterion("determinism", [&](std::string& detail) {
    zek::EnumStats s1, s2;
    auto first = zek::enumerate_snapshot(3, acceptance_caps(), &s1);
    auto second = zek::enumerate_snapshot(3, acceptance_caps(), &s2);
    std::ostringstream join1, join2;
    for (const auto& l : first) join1 << l << '\n';
    for (const auto& l : second) join2 << l << '\n';
    std::ostringstream os;
    os << first.size() << " snapshot lines, " << enum_stats.applications
       << " applications in the shared run";
    detail = os.str();
    return join1.str() == join2.str() && !first.empty();
  });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
