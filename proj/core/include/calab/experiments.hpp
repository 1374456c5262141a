#pragma once

// Reproductions on the family Z -> Z/mZ: marked-subgroup convergence,
// quotient scans, the limit lemmas, the circulant example, and the sweeps
// behind `calab verify`.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "calab/ca_core.hpp"
#include "calab/deciders_finite.hpp"
#include "calab/deciders_onedim.hpp"

namespace calab {

/// The subgroup mZ; m = 0 is the trivial subgroup {0}.
struct MarkedSubgroupZ {
  std::int64_t modulus = 0;
};

/// {k in E : k = 0 mod m}, or {0} ∩ E for m = 0. Sorted.
std::vector<std::int64_t> marked_intersection(MarkedSubgroupZ h, std::span<const std::int64_t> window);

struct ConvergenceReport {
  std::vector<std::int64_t> window;
  std::vector<std::int64_t> limit_intersection;
  /// (index, intersection) for every tested index.
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> intersections;
  std::int64_t threshold = 0;
};

/// Smallest i0 in [first_index, max_index] such that every tested i >= i0
/// meets the window like the limit does. Throws NoStabilization.
ConvergenceReport convergence_threshold(const std::function<MarkedSubgroupZ(std::int64_t)>& sequence,
                                        MarkedSubgroupZ limit, std::span<const std::int64_t> window,
                                        std::int64_t max_index, std::int64_t first_index = 1);

inline constexpr std::uint64_t kDefaultScanBudget = std::uint64_t{1} << 16;

struct ScanEntry {
  std::int64_t modulus = 0;
  /// "exhaustive", "gf2" or "budget_exceeded".
  std::string method;
  bool budget_exceeded = false;
  bool injective = false;
  bool surjective = false;
  bool pre_injective = false;
  bool post_surjective = false;
  bool bijective = false;
  /// Present for binary additive rules.
  std::optional<int> det_gf2;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  PropertyReport1D source;
};

/// Flags of every induced tau_m (moduli strictly increasing): exhaustive when
/// q^m <= budget, the GF(2) determinant for additive binary rules beyond
/// that, otherwise the entry is marked budget_exceeded. Parallel over moduli.
ScanReport quotient_scan(const LocalRule& rule, std::span<const std::int64_t> moduli,
                         std::uint64_t budget = kDefaultScanBudget, const OneDimOptions& options = {});

/// { "experiment", "params", "entries", "verdict" }; verdict is pass, fail
/// or info.
struct ExperimentReport {
  std::string experiment;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json entries = nlohmann::json::array();
  std::string verdict = "pass";

  nlohmann::json to_json() const;
};

/// All scanned tau_m pre-injective implies the source is pre-injective.
/// Verdict info when the premise fails (vacuous). Throws ImplicationViolated.
ExperimentReport verify_preinjective_limit(const LocalRule& rule, std::span<const std::int64_t> moduli,
                                           std::uint64_t budget = kDefaultScanBudget);

/// Post-surjective source: smallest scanned modulus from which every tau_m is
/// surjective and injective (params.threshold, null when not found).
/// Otherwise params.converse_failure is true when every tau_m is
/// nevertheless post-surjective.
ExperimentReport verify_postsurjective_openness(const LocalRule& rule, std::span<const std::int64_t> moduli,
                                                std::uint64_t budget = kDefaultScanBudget);

/// The circulant example end to end; stops at the first failing item.
ExperimentReport reproduce_example7(std::int64_t max_n);

// -- sweeps ------------------------------------------------------------------

struct SweepOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultScanBudget;
};

ExperimentReport sweep_garden_of_eden(const SweepOptions& options = {});
ExperimentReport sweep_onedim_equivalence(const SweepOptions& options = {});
/// Post-surjective => pre-injective on every quotient and on the limit, for
/// all 256 width-3 binary rules along moduli 3n+1 <= 13.
ExperimentReport sweep_closedness(const SweepOptions& options = {});
ExperimentReport sweep_finite_collapse(const SweepOptions& options = {});
ExperimentReport sweep_subgroup_induction(const SweepOptions& options = {});
ExperimentReport sweep_quotient_diagram(const SweepOptions& options = {});
ExperimentReport sweep_block_conjugacy(const SweepOptions& options = {});
ExperimentReport sweep_sequential_correction(const SweepOptions& options = {});
ExperimentReport check_marked_convergence(const SweepOptions& options = {});

/// Suite names accepted by run_suite, in execution order for "all".
std::vector<std::string> suite_names();
/// One report per suite; "all" runs every suite. Throws InvalidArgument for
/// an unknown name.
std::vector<ExperimentReport> run_suite(std::string_view name, const SweepOptions& options = {});

// -- serialization -------------------------------------------------------------

nlohmann::json to_json(const PropertyReport1D& report);
nlohmann::json to_json(const PropertyReportFinite& report);
nlohmann::json to_json(const ScanEntry& entry);
nlohmann::json to_json(const PatchedConfigZ& x);

/// Seeded random rule: memory a random non-empty subset of [lo, hi].
LocalRule random_rule(std::mt19937_64& rng, std::uint32_t q, Offset lo, Offset hi);

/// Moduli 3n+1 for n = 1..count.
std::vector<std::int64_t> example7_moduli(std::int64_t count);

}  // namespace calab
