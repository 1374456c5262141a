// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact;
// runtime limits are wall-clock and inclusive of setup.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "calab/ca_core.hpp"
#include "calab/deciders_finite.hpp"
#include "calab/deciders_onedim.hpp"
#include "calab/error.hpp"
#include "calab/experiments.hpp"
#include "calab/gf2lab.hpp"
#include "calab/groups.hpp"
#include "calab/transport.hpp"

using namespace calab;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime limit
  std::function<std::string()> check;  // empty string: pass; otherwise the reason
};

CirculantSpec family(std::size_t n) { return {3 * n + 1, {1, 1, 1}}; }

std::string det_gf2_family() {
  for (std::size_t n = 1; n <= 64; ++n) {
    if (det_gf2(circulant(family(n))) != 1) return "det_gf2 != 1 at n=" + std::to_string(n);
  }
  return {};
}

std::string det_int_family() {
  for (std::size_t n = 1; n <= 8; ++n) {
    const mpz_class d = det_int(circulant_int(family(n)));
    if (d != 3) return "det_int = " + d.get_str() + " at n=" + std::to_string(n);
  }
  return {};
}

std::string exhaustive_bijectivity() {
  for (std::int64_t n = 1; 3 * n + 1 <= 16; ++n) {
    const std::int64_t m = 3 * n + 1;
    const auto report = analyze_finite(induce_quotient_ca(LocalRule::rule150w(), CyclicQuotientMapZ(m)), make_cyclic(m));
    const int det = det_gf2(circulant(family(static_cast<std::size_t>(n))));
    if (!report.bijective || det != 1) return "modulus " + std::to_string(m) + " not bijective";
  }
  return {};
}

std::string witness() {
  const LocalRule rule = LocalRule::rule150w();
  const PeriodicConfigZ c = PeriodicConfigZ::constant(0);
  const PeriodicConfigZ d({0, 1, 1});
  if (!(apply_periodic(rule, d) == c)) return "tau(d) != c";
  if (!(apply_periodic(rule, c) == c)) return "tau(c) != c";
  if (c == d) return "c == d";
  return {};
}

std::string limit_flags() {
  const auto r = analyze_onedim(LocalRule::rule150w());
  if (r.injective || !r.surjective || !r.pre_injective || r.post_surjective) return "flags differ";
  return {};
}

std::string goe_sweep() {
  for (std::uint32_t n = 0; n < 256; ++n) {
    const LocalRule rule = LocalRule::elementary(n);
    if (decide_pre_injective(rule).pre_injective != decide_surjective(rule).surjective) {
      return "disagreement on rule " + std::to_string(n);
    }
  }
  return {};
}

std::string equivalence_sweep() {
  for (std::uint32_t n = 0; n < 256; ++n) {
    const LocalRule rule = LocalRule::elementary(n);
    const bool injective = decide_injective(rule).injective;
    if (injective != decide_post_surjective(rule).post_surjective) return "disagreement on rule " + std::to_string(n);
    if (!injective) continue;
    try {
      if (!verify_inverse(rule, find_inverse_rule(rule))) return "inverse fails on rule " + std::to_string(n);
    } catch (const Error& e) {
      return "rule " + std::to_string(n) + ": " + e.what();
    }
  }
  return {};
}

std::string suite(const char* name) {
  const auto reports = run_suite(name);
  for (const auto& r : reports) {
    if (r.verdict != "pass") return r.experiment + " verdict " + r.verdict;
  }
  return {};
}

std::string marked_convergence() {
  std::vector<std::int64_t> window;
  for (std::int64_t k = -5; k <= 5; ++k) window.push_back(k);
  const auto r = convergence_threshold([](std::int64_t n) { return MarkedSubgroupZ{3 * n + 1}; }, MarkedSubgroupZ{0},
                                       window, 64);
  if (r.threshold != 2) return "threshold " + std::to_string(r.threshold);
  try {
    convergence_threshold([](std::int64_t) { return MarkedSubgroupZ{2}; }, MarkedSubgroupZ{0}, window, 64);
    return "2Z family stabilised";
  } catch (const Error& e) {
    if (e.code() != Errc::no_stabilization) return std::string("unexpected error ") + e.what();
  }
  return {};
}

std::string openness() {
  const auto moduli = example7_moduli(32);
  const auto scan = quotient_scan(LocalRule::rule150w(), moduli);
  for (const auto& e : scan.entries) {
    if (!e.bijective) return "modulus " + std::to_string(e.modulus) + " not bijective (" + e.method + ")";
  }
  if (scan.source.post_surjective) return "source post-surjective";
  const auto report = verify_postsurjective_openness(LocalRule::rule150w(), moduli);
  if (!report.params.value("converse_failure", false)) return "converse failure not flagged";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "circulant det_gf2 = 1 for n in 1..64", 5.0, det_gf2_family},
      {2, "circulant det_int = 3 for n in 1..8", 2.0, det_int_family},
      {3, "exhaustive bijectivity of tau_n for 3n+1 <= 16", 5.0, exhaustive_bijectivity},
      {4, "witness tau(c) = tau(d) = c", 0, witness},
      {5, "rule150w limit flags", 0, limit_flags},
      {6, "Garden-of-Eden sweep over 256 rules", 30.0, goe_sweep},
      {7, "injective == post-surjective with verified inverses", 60.0, equivalence_sweep},
      {8, "finite collapse on cyclic 4, 5, 6", 0, [] { return suite("finite-collapse"); }},
      {9, "subgroup induction instance", 0, [] { return suite("subgroup"); }},
      {10, "quotient diagram for m <= 12", 0, [] { return suite("diagram"); }},
      {11, "block-recoding conjugacy", 0, [] { return suite("blocks"); }},
      {12, "sequential correction on cyclic 5 and 7", 0, [] { return suite("correction"); }},
      {13, "marked convergence threshold and non-stabilisation", 0, marked_convergence},
      {14, "openness scan and converse failure", 0, openness},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      reason = "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(c.limit_seconds) + " s";
    }
    const bool ok = reason.empty();
    failed += !ok;
    std::printf("%s [%2d] %s (%.3f s%s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str() : "",
                ok ? "" : ": ", reason.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
