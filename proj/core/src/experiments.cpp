#include "calab/experiments.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "calab/error.hpp"
#include "calab/gf2lab.hpp"
#include "calab/parallel.hpp"
#include "calab/rule_io.hpp"
#include "calab/transport.hpp"

namespace calab {

using nlohmann::json;

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

const char* verdict_of(bool ok) { return ok ? "pass" : "fail"; }

std::vector<std::int64_t> window_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

FiniteConfig random_config(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
  std::uniform_int_distribution<Symbol> dist(0, q - 1);
  FiniteConfig x{std::vector<Symbol>(n)};
  for (auto& c : x.cells) c = dist(rng);
  return x;
}

json word_json(const PeriodicConfigZ& x) { return x.word(); }

}  // namespace

// -- marked subgroups ----------------------------------------------------------

std::vector<std::int64_t> marked_intersection(MarkedSubgroupZ h, std::span<const std::int64_t> window) {
  if (h.modulus < 0) fail(Errc::invalid_argument, "marked subgroup modulus must be >= 0");
  std::vector<std::int64_t> out;
  for (std::int64_t k : window) {
    if (h.modulus == 0 ? k == 0 : floor_mod(k, h.modulus) == 0) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConvergenceReport convergence_threshold(const std::function<MarkedSubgroupZ(std::int64_t)>& sequence,
                                        MarkedSubgroupZ limit, std::span<const std::int64_t> window,
                                        std::int64_t max_index, std::int64_t first_index) {
  if (max_index < first_index) fail(Errc::invalid_argument, "empty index range");
  ConvergenceReport report;
  report.window.assign(window.begin(), window.end());
  report.limit_intersection = marked_intersection(limit, window);

  std::optional<std::int64_t> threshold;
  for (std::int64_t i = first_index; i <= max_index; ++i) {
    auto meet = marked_intersection(sequence(i), window);
    if (meet == report.limit_intersection) {
      if (!threshold) threshold = i;
    } else {
      threshold.reset();
    }
    report.intersections.emplace_back(i, std::move(meet));
  }
  if (!threshold) {
    fail(Errc::no_stabilization, "intersections differ from the limit's at index " + std::to_string(max_index));
  }
  report.threshold = *threshold;
  return report;
}

// -- quotient scans --------------------------------------------------------------

ScanReport quotient_scan(const LocalRule& rule, std::span<const std::int64_t> moduli, std::uint64_t budget,
                         const OneDimOptions& options) {
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 1) fail(Errc::invalid_argument, "moduli must be positive");
    if (i > 0 && moduli[i] <= moduli[i - 1]) fail(Errc::invalid_argument, "moduli must be strictly increasing");
  }
  const bool additive = rule.q() == 2 && is_additive(rule);

  ScanReport report{{}, analyze_onedim(rule, options)};
  report.entries = parallel_map<ScanEntry>(moduli.size(), [&](std::size_t i) {
    ScanEntry entry;
    entry.modulus = moduli[i];
    if (additive) entry.det_gf2 = det_gf2(linear_ca_to_circulant(rule, entry.modulus));

    const std::uint64_t count = checked_power(rule.q(), static_cast<std::uint64_t>(entry.modulus), budget);
    if (count != 0) {
      const CyclicQuotientMapZ map(entry.modulus);
      const auto finite = analyze_finite(induce_quotient_ca(rule, map), make_cyclic(entry.modulus), budget);
      entry.method = "exhaustive";
      entry.injective = finite.injective;
      entry.surjective = finite.surjective;
      entry.pre_injective = finite.pre_injective;
      entry.post_surjective = finite.post_surjective;
      entry.bijective = finite.bijective;
      if (entry.det_gf2 && (*entry.det_gf2 == 1) != entry.bijective) {
        fail(Errc::internal, "GF(2) determinant disagrees with exhaustive analysis at modulus " +
                                 std::to_string(entry.modulus));
      }
    } else if (entry.det_gf2) {
      entry.method = "gf2";
      const bool invertible = *entry.det_gf2 == 1;
      entry.injective = entry.surjective = entry.pre_injective = entry.post_surjective = entry.bijective = invertible;
    } else {
      entry.method = "budget_exceeded";
      entry.budget_exceeded = true;
    }
    return entry;
  });
  return report;
}

json ExperimentReport::to_json() const {
  return json{{"experiment", experiment}, {"params", params}, {"entries", entries}, {"verdict", verdict}};
}

namespace {

json moduli_json(std::span<const std::int64_t> moduli) { return std::vector<std::int64_t>(moduli.begin(), moduli.end()); }

}  // namespace

ExperimentReport verify_preinjective_limit(const LocalRule& rule, std::span<const std::int64_t> moduli,
                                           std::uint64_t budget) {
  const ScanReport scan = quotient_scan(rule, moduli, budget);
  ExperimentReport report;
  report.experiment = "preinjective_limit";
  report.params = {{"rule", rule_to_json(rule)}, {"moduli", moduli_json(moduli)}, {"budget", budget}};

  bool premise = true;
  std::size_t decided = 0;
  for (const auto& entry : scan.entries) {
    report.entries.push_back(to_json(entry));
    if (entry.budget_exceeded) continue;
    ++decided;
    premise = premise && entry.pre_injective;
  }
  premise = premise && decided > 0;
  report.params["premise_holds"] = premise;
  report.params["limit_pre_injective"] = scan.source.pre_injective;
  report.params["finite_collapse"] = "pre-injective equals injective on every finite quotient";
  if (premise && !scan.source.pre_injective) {
    fail(Errc::implication_violated, "every scanned quotient is pre-injective but the limit is not");
  }
  report.verdict = premise ? "pass" : "info";
  return report;
}

ExperimentReport verify_postsurjective_openness(const LocalRule& rule, std::span<const std::int64_t> moduli,
                                                std::uint64_t budget) {
  const ScanReport scan = quotient_scan(rule, moduli, budget);
  ExperimentReport report;
  report.experiment = "postsurjective_openness";
  report.params = {{"rule", rule_to_json(rule)},
                   {"moduli", moduli_json(moduli)},
                   {"budget", budget},
                   {"source_post_surjective", scan.source.post_surjective},
                   {"source_injective", scan.source.injective},
                   {"finite_collapse", "post-surjective equals surjective on every finite quotient"}};
  for (const auto& entry : scan.entries) report.entries.push_back(to_json(entry));

  const auto& entries = scan.entries;
  const bool any_unknown = std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.budget_exceeded; });
  if (scan.source.post_surjective) {
    std::optional<std::int64_t> threshold;
    for (const auto& entry : entries) {
      const bool good = !entry.budget_exceeded && entry.post_surjective && entry.injective;
      if (good && !threshold) threshold = entry.modulus;
      if (!good) threshold.reset();
    }
    report.params["threshold"] = threshold ? json(*threshold) : json(nullptr);
    report.params["threshold_not_found"] = !threshold.has_value();
    report.params["converse_failure"] = false;
    report.verdict = threshold ? "pass" : "info";
  } else {
    const bool all_post = !entries.empty() && !any_unknown &&
                          std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.post_surjective; });
    report.params["threshold"] = nullptr;
    report.params["converse_failure"] = all_post;
    report.verdict = "info";
  }
  return report;
}

std::vector<std::int64_t> example7_moduli(std::int64_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= count; ++n) out.push_back(3 * n + 1);
  return out;
}

ExperimentReport reproduce_example7(std::int64_t max_n) {
  if (max_n < 1) fail(Errc::invalid_argument, "max_n must be >= 1");
  ExperimentReport report;
  report.experiment = "example7";
  report.params = {{"max_n", max_n}};
  auto record = [&](std::string item, bool ok, json detail) {
    report.entries.push_back({{"item", std::move(item)}, {"ok", ok}, {"detail", std::move(detail)}});
    if (!ok) report.verdict = "fail";
    return ok;
  };
  const LocalRule rule = LocalRule::rule150w();
  const std::vector<Symbol> f{1, 1, 1};

  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto size = static_cast<std::size_t>(3 * n + 1);
    const int det = det_gf2(circulant({size, f}));
    if (!record("det_gf2", det == 1, {{"n", n}, {"size", size}, {"value", det}})) return report;
  }
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(max_n, 8); ++n) {
    const auto size = static_cast<std::size_t>(3 * n + 1);
    const mpz_class det = det_int(circulant_int({size, f}));
    if (!record("det_int", det == 3, {{"n", n}, {"size", size}, {"value", det.get_str()}})) return report;
  }
  for (std::int64_t n = 1; n <= max_n && 3 * n + 1 <= 16; ++n) {
    const std::int64_t m = 3 * n + 1;
    const LocalRule induced = induce_quotient_ca(rule, CyclicQuotientMapZ(m));
    const auto finite = analyze_finite(induced, make_cyclic(m));
    const bool matrix_ok = linear_ca_to_circulant(rule, m) == circulant({static_cast<std::size_t>(m), f});
    if (!record("quotient_bijective", finite.bijective && matrix_ok,
                {{"n", n}, {"modulus", m}, {"bijective", finite.bijective}, {"circulant_matches", matrix_ok}})) {
      return report;
    }
  }

  const PeriodicConfigZ c = PeriodicConfigZ::constant(0);
  const PeriodicConfigZ d({0, 1, 1});
  const bool witness_ok = apply_periodic(rule, d) == c && apply_periodic(rule, c) == c;
  if (!record("witness", witness_ok, {{"c", word_json(c)}, {"d", word_json(d)}})) return report;

  const PropertyReport1D source = analyze_onedim(rule);
  if (!record("source_surjective", source.surjective, {{"expected", true}})) return report;
  bool injective_ok = !source.injective && source.non_injectivity_witness.has_value();
  if (injective_ok) {
    const auto& [x, y] = *source.non_injectivity_witness;
    injective_ok = !(x == y) && apply_periodic(rule, x) == apply_periodic(rule, y);
  }
  if (!record("source_not_injective", injective_ok, {{"expected", false}})) return report;
  if (!record("source_pre_injective", source.pre_injective, {{"expected", true}})) return report;
  if (!record("source_not_post_surjective", !source.post_surjective,
              {{"expected", false}, {"basis", "equivalent to injectivity in one dimension"}})) {
    return report;
  }
  return report;
}

// -- sweeps ------------------------------------------------------------------------

LocalRule random_rule(std::mt19937_64& rng, std::uint32_t q, Offset lo, Offset hi) {
  std::bernoulli_distribution pick(0.5);
  std::vector<Offset> memory;
  while (memory.empty()) {
    for (Offset m = lo; m <= hi; ++m) {
      if (pick(rng)) memory.push_back(m);
    }
  }
  const std::uint64_t size = checked_power(q, memory.size(), kMaxRuleTable);
  if (size == 0) fail(Errc::budget_exceeded, "random rule table too large");
  std::uniform_int_distribution<Symbol> dist(0, q - 1);
  std::vector<Symbol> table(size);
  for (auto& s : table) s = dist(rng);
  return LocalRule(q, std::move(memory), std::move(table));
}

ExperimentReport sweep_garden_of_eden(const SweepOptions&) {
  ExperimentReport report;
  report.experiment = "goe";
  report.params = {{"rules", "all 256 binary rules on memory {0,1,2}"}};
  const auto rows = parallel_map<json>(256, [](std::size_t n) {
    const LocalRule rule = LocalRule::elementary(static_cast<std::uint32_t>(n));
    const bool surjective = decide_surjective(rule).surjective;
    const bool pre_injective = decide_pre_injective(rule).pre_injective;
    return json{{"rule", n}, {"surjective", surjective}, {"pre_injective", pre_injective},
                {"agree", surjective == pre_injective}};
  });
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row["agree"].get<bool>();
    report.entries.push_back(row);
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_onedim_equivalence(const SweepOptions&) {
  ExperimentReport report;
  report.experiment = "equivalence";
  report.params = {{"rules", "all 256 binary rules on memory {0,1,2}"}, {"max_radius", kDefaultInverseRadius}};
  const auto rows = parallel_map<json>(256, [](std::size_t n) {
    const LocalRule rule = LocalRule::elementary(static_cast<std::uint32_t>(n));
    const bool injective = decide_injective(rule).injective;
    const auto post = decide_post_surjective(rule);
    json row{{"rule", n}, {"injective", injective}, {"post_surjective", post.post_surjective}};
    bool ok = injective == post.post_surjective;
    if (injective) {
      bool verified = false;
      if (post.inverse) {
        verified = verify_inverse(rule, *post.inverse);
        row["inverse"] = rule_to_json(*post.inverse);
      }
      row["inverse_verified"] = verified;
      ok = ok && verified;
    }
    row["ok"] = ok;
    return row;
  });
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row["ok"].get<bool>();
    report.entries.push_back(row);
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_closedness(const SweepOptions& options) {
  ExperimentReport report;
  report.experiment = "closedness";
  const auto moduli = example7_moduli(4);
  report.params = {{"rules", "all 256 binary rules on memory {0,1,2}"}, {"moduli", moduli},
                   {"property", "post_surjective implies pre_injective"}};
  const auto rows = parallel_map<json>(256, [&](std::size_t n) {
    const LocalRule rule = LocalRule::elementary(static_cast<std::uint32_t>(n));
    OneDimOptions one_dim;
    one_dim.correction_instances = 0;
    const ScanReport scan = quotient_scan(rule, moduli, options.budget, one_dim);
    bool quotients = true;
    for (const auto& e : scan.entries) quotients = quotients && (e.budget_exceeded || !e.post_surjective || e.pre_injective);
    const bool limit = !scan.source.post_surjective || scan.source.pre_injective;
    return json{{"rule", n}, {"quotients_satisfy", quotients}, {"limit_satisfies", limit},
                {"ok", !quotients || limit}};
  });
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row["ok"].get<bool>();
    report.entries.push_back(row);
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_finite_collapse(const SweepOptions& options) {
  ExperimentReport report;
  report.experiment = "finite_collapse";
  const std::vector<std::int64_t> orders{4, 5, 6};
  constexpr std::size_t kRules = 200;
  report.params = {{"orders", orders}, {"rules_per_order", kRules}, {"seed", options.seed}};
  bool ok = true;
  for (std::int64_t order : orders) {
    const FiniteGroup group = make_cyclic(order);
    std::mt19937_64 rng(options.seed * 1000003 + static_cast<std::uint64_t>(order));
    std::vector<LocalRule> rules;
    std::uniform_int_distribution<std::uint32_t> q_dist(2, 3);
    for (std::size_t i = 0; i < kRules; ++i) {
      const std::uint32_t q = q_dist(rng);
      rules.push_back(random_rule(rng, q, 0, std::min<Offset>(order - 1, 3)));
    }
    const auto flags = parallel_map<json>(kRules, [&](std::size_t i) {
      const auto finite = analyze_finite(rules[i], group);
      return json{{"post_equals_surjective", finite.post_surjective == finite.surjective},
                  {"pre_equals_injective", finite.pre_injective == finite.injective},
                  {"bijective", finite.bijective}};
    });
    std::size_t agree = 0;
    std::size_t bijective = 0;
    for (const auto& f : flags) {
      agree += f["post_equals_surjective"].get<bool>() && f["pre_equals_injective"].get<bool>();
      bijective += f["bijective"].get<bool>();
    }
    ok = ok && agree == kRules;
    report.entries.push_back({{"order", order}, {"rules", kRules}, {"agree", agree}, {"bijective", bijective}});
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_subgroup_induction(const SweepOptions&) {
  ExperimentReport report;
  report.experiment = "subgroup_induction";
  const FiniteGroup group = make_cyclic(6);
  const std::vector<ElementId> subgroup{0, 2, 4};
  const SubgroupView view = subgroup_view(group, subgroup);
  const CosetTable cosets = coset_decomposition(group, subgroup);
  report.params = {{"group", "cyclic(6)"}, {"subgroup", subgroup}, {"memory", {0, 2}}};

  bool ok = true;
  for (std::uint32_t number = 0; number < 16; ++number) {
    std::vector<Symbol> table(4);
    for (std::size_t i = 0; i < 4; ++i) table[i] = (number >> i) & 1U;
    const LocalRule rule(2, {0, 2}, table);
    const LocalRule tau = restrict_to_subgroup(rule, view);
    const LocalRule sigma = induce_supergroup_ca(rule, group, subgroup);
    const auto on_h = analyze_finite(tau, view.group);
    const auto on_g = analyze_finite(sigma, group);
    const bool post_equiv = on_h.post_surjective == on_g.post_surjective;
    const bool pre_implication = !on_g.pre_injective || on_h.pre_injective;
    const bool decomposition = check_coset_decomposition(sigma, cosets).holds;
    const bool row_ok = post_equiv && pre_implication && decomposition;
    ok = ok && row_ok;
    report.entries.push_back({{"table", table},
                              {"tau_post_surjective", on_h.post_surjective},
                              {"sigma_post_surjective", on_g.post_surjective},
                              {"tau_pre_injective", on_h.pre_injective},
                              {"sigma_pre_injective", on_g.pre_injective},
                              {"decomposition_holds", decomposition},
                              {"ok", row_ok}});
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_quotient_diagram(const SweepOptions& options) {
  ExperimentReport report;
  report.experiment = "quotient_diagram";
  constexpr std::size_t kRules = 50;
  constexpr std::int64_t kMaxModulus = 12;
  report.params = {{"rules", kRules}, {"max_modulus", kMaxModulus}, {"q", 2}, {"seed", options.seed}};
  std::mt19937_64 rng(options.seed);
  std::vector<LocalRule> rules;
  for (std::size_t i = 0; i < kRules; ++i) rules.push_back(random_rule(rng, 2, -2, 2));

  const auto rows = parallel_map<json>(kRules, [&](std::size_t i) {
    const LocalRule& rule = rules[i];
    std::uint64_t checked = 0;
    std::optional<std::int64_t> failed_modulus;
    for (std::int64_t m = 1; m <= kMaxModulus && !failed_modulus; ++m) {
      const CyclicQuotientMapZ map(m);
      const LocalRule induced = induce_quotient_ca(rule, map);
      const FiniteGroup group = make_cyclic(m);
      const std::uint64_t total = std::uint64_t{1} << m;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const FiniteConfig x = config_from_index(idx, 2, static_cast<std::size_t>(m));
        ++checked;
        if (project_config(apply_periodic(rule, lift_config(x, map)), map) != apply_finite(induced, group, x)) {
          failed_modulus = m;
          break;
        }
      }
    }
    return json{{"rule", rule_to_json(rule)}, {"configurations", checked},
                {"failed_modulus", failed_modulus ? json(*failed_modulus) : json(nullptr)},
                {"ok", !failed_modulus}};
  });
  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row["ok"].get<bool>();
    report.entries.push_back(row);
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_block_conjugacy(const SweepOptions& options) {
  ExperimentReport report;
  report.experiment = "block_conjugacy";
  constexpr std::size_t kPatches = 1000;
  report.params = {{"blocks", {1, 2, 3}}, {"rules", {"shift", "rule150w"}}, {"patches", kPatches},
                   {"seed", options.seed}};
  const std::vector<std::pair<std::string, LocalRule>> rules{{"shift", LocalRule::shift()},
                                                             {"rule150w", LocalRule::rule150w()}};
  bool ok = true;
  for (const auto& [name, rule] : rules) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      const BlockRecoded recoded = block_recode_ca(rule, m);
      const BlockRecoding& code = recoded.recoding;
      std::uint64_t periodic = 0;
      std::uint64_t periodic_ok = 0;
      // Base-alphabet configurations of period <= 2m+3; packing repeats them
      // to a common multiple of the block length.
      for (std::int64_t p = 1; p <= 2 * m + 3; ++p) {
        const std::uint64_t total = checked_power(rule.q(), static_cast<std::uint64_t>(p));
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          const PeriodicConfigZ x(config_from_index(idx, rule.q(), static_cast<std::size_t>(p)).cells);
          const PeriodicConfigZ packed = code.pack(x);
          ++periodic;
          periodic_ok += code.unpack(apply_periodic(recoded.rule, packed)) == apply_periodic(rule, code.unpack(packed));
        }
      }
      std::mt19937_64 rng(options.seed * 7919 + static_cast<std::uint64_t>(m));
      std::uint64_t patched_ok = 0;
      for (std::size_t i = 0; i < kPatches; ++i) {
        const PatchedConfigZ packed = code.pack(random_patched(rng, rule.q()));
        patched_ok += code.unpack(apply_patched(recoded.rule, packed)) == apply_patched(rule, code.unpack(packed));
      }
      const bool row_ok = periodic_ok == periodic && patched_ok == kPatches;
      ok = ok && row_ok;
      report.entries.push_back({{"rule", name}, {"block", m}, {"periodic", periodic},
                                {"periodic_ok", periodic_ok}, {"patched", kPatches},
                                {"patched_ok", patched_ok}, {"ok", row_ok}});
    }
  }
  report.verdict = verdict_of(ok);
  return report;
}

ExperimentReport sweep_sequential_correction(const SweepOptions& options) {
  ExperimentReport report;
  report.experiment = "sequential_correction";
  constexpr std::size_t kInstances = 200;
  const std::vector<std::int64_t> orders{5, 7};
  report.params = {{"orders", orders}, {"instances", kInstances}, {"seed", options.seed},
                   {"rules", "binary rules on memory {0,1,2} whose induced automaton is surjective"}};
  bool ok = true;
  for (std::int64_t order : orders) {
    const FiniteGroup group = make_cyclic(order);
    const CyclicQuotientMapZ map(order);
    const auto rows = parallel_map<json>(256, [&](std::size_t number) {
      const LocalRule induced =
          induce_quotient_ca(LocalRule::elementary(static_cast<std::uint32_t>(number)), map);
      if (!analyze_finite(induced, group).surjective) return json(nullptr);
      std::mt19937_64 rng(options.seed * 65537 + static_cast<std::uint64_t>(order) * 256 + number);
      std::size_t succeeded = 0;
      for (std::size_t i = 0; i < kInstances; ++i) {
        const FiniteConfig x = random_config(rng, 2, group.order());
        const FiniteConfig y = random_config(rng, 2, group.order());
        const auto steps = sequential_correction(induced, group, x, y);
        succeeded += apply_finite(induced, group, steps.back()) == y && steps.front() == x;
      }
      return json{{"order", order}, {"rule", number}, {"instances", kInstances}, {"succeeded", succeeded}};
    });
    for (const auto& row : rows) {
      if (row.is_null()) continue;
      ok = ok && row["succeeded"].get<std::size_t>() == kInstances;
      report.entries.push_back(row);
    }
  }
  report.verdict = verdict_of(ok && !report.entries.empty());
  return report;
}

ExperimentReport check_marked_convergence(const SweepOptions&) {
  ExperimentReport report;
  report.experiment = "marked_convergence";
  const auto window = window_range(-5, 5);
  constexpr std::int64_t kMaxIndex = 32;
  report.params = {{"window", window}, {"max_index", kMaxIndex}};

  const auto family = convergence_threshold([](std::int64_t n) { return MarkedSubgroupZ{3 * n + 1}; },
                                            MarkedSubgroupZ{0}, window, kMaxIndex);
  const bool threshold_ok = family.threshold == 2;
  report.entries.push_back({{"family", "(3n+1)Z"}, {"threshold", family.threshold}, {"ok", threshold_ok}});

  bool refused = false;
  try {
    convergence_threshold([](std::int64_t) { return MarkedSubgroupZ{2}; }, MarkedSubgroupZ{0}, window_range(-2, 2),
                          kMaxIndex);
  } catch (const Error& e) {
    refused = e.code() == Errc::no_stabilization;
  }
  report.entries.push_back({{"family", "2Z"}, {"no_stabilization", refused}, {"ok", refused}});
  report.verdict = verdict_of(threshold_ok && refused);
  return report;
}

std::vector<std::string> suite_names() {
  return {"goe",      "equivalence", "closedness", "finite-collapse", "subgroup", "diagram",
          "blocks",   "correction",  "convergence", "openness",       "example7"};
}

std::vector<ExperimentReport> run_suite(std::string_view name, const SweepOptions& options) {
  if (name == "all") {
    std::vector<ExperimentReport> out;
    for (const auto& suite : suite_names()) {
      auto reports = run_suite(suite, options);
      out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
  }
  if (name == "goe") return {sweep_garden_of_eden(options)};
  if (name == "equivalence") return {sweep_onedim_equivalence(options)};
  if (name == "closedness") return {sweep_closedness(options)};
  if (name == "finite-collapse") return {sweep_finite_collapse(options)};
  if (name == "subgroup") return {sweep_subgroup_induction(options)};
  if (name == "diagram") return {sweep_quotient_diagram(options)};
  if (name == "blocks") return {sweep_block_conjugacy(options)};
  if (name == "correction") return {sweep_sequential_correction(options)};
  if (name == "convergence") return {check_marked_convergence(options)};
  if (name == "openness") {
    const auto moduli = example7_moduli(32);
    auto report = verify_postsurjective_openness(LocalRule::rule150w(), moduli, options.budget);
    const bool all_bijective = std::all_of(report.entries.begin(), report.entries.end(),
                                           [](const json& e) { return e.contains("bijective") && e["bijective"].get<bool>(); });
    report.verdict = verdict_of(all_bijective && report.params["converse_failure"].get<bool>());
    return {report};
  }
  if (name == "example7") return {reproduce_example7(32)};
  fail(Errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

// -- serialization -----------------------------------------------------------------

json to_json(const PatchedConfigZ& x) {
  json patch = json::array();
  for (const auto& [k, v] : x.patch()) patch.push_back({k, v});
  return json{{"background", x.background().word()}, {"patch", patch}};
}

json to_json(const PropertyReport1D& report) {
  json witnesses = json::object();
  witnesses["non_injective"] = report.non_injectivity_witness
                                   ? json{report.non_injectivity_witness->first.word(),
                                          report.non_injectivity_witness->second.word()}
                                   : json(nullptr);
  witnesses["non_pre_injective"] = report.non_pre_injectivity_witness
                                       ? json{to_json(report.non_pre_injectivity_witness->first),
                                              to_json(report.non_pre_injectivity_witness->second)}
                                       : json(nullptr);
  witnesses["orphan"] = report.orphan ? json(*report.orphan) : json(nullptr);

  json doc{{"rule", rule_to_json(report.rule)},
           {"injective", report.injective},
           {"surjective", report.surjective},
           {"pre_injective", report.pre_injective},
           {"post_surjective", report.post_surjective},
           {"post_surjective_basis", "equivalent to injectivity in one dimension"},
           {"invertible", report.invertible},
           {"inverse_bound_exceeded", report.inverse_bound_exceeded},
           {"witnesses", witnesses}};
  doc["inverse"] = report.inverse ? rule_to_json(*report.inverse) : json(nullptr);
  doc["corrections"] = report.corrections
                           ? json{{"attempted", report.corrections->attempted},
                                  {"verified", report.corrections->verified}}
                           : json(nullptr);
  return doc;
}

json to_json(const PropertyReportFinite& report) {
  json doc{{"injective", report.injective},         {"surjective", report.surjective},
           {"pre_injective", report.pre_injective}, {"post_surjective", report.post_surjective},
           {"bijective", report.bijective}};
  doc["collision"] = report.collision ? json{report.collision->first.cells, report.collision->second.cells}
                                      : json(nullptr);
  doc["orphan"] = report.orphan ? json(report.orphan->cells) : json(nullptr);
  return doc;
}

json to_json(const ScanEntry& entry) {
  json doc{{"modulus", entry.modulus},
           {"method", entry.method},
           {"budget_exceeded", entry.budget_exceeded}};
  if (!entry.budget_exceeded) {
    doc["injective"] = entry.injective;
    doc["surjective"] = entry.surjective;
    doc["pre_injective"] = entry.pre_injective;
    doc["post_surjective"] = entry.post_surjective;
    doc["bijective"] = entry.bijective;
  }
  doc["det_gf2"] = entry.det_gf2 ? json(*entry.det_gf2) : json(nullptr);
  return doc;
}

}  // namespace calab
