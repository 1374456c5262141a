#include "calab/deciders_finite.hpp"

#include <limits>
#include <string>

#include "calab/error.hpp"

namespace calab {

namespace {

std::uint64_t config_count(const LocalRule& rule, const FiniteGroup& group, std::uint64_t budget) {
  const std::uint64_t total = checked_power(rule.q(), group.order(), budget);
  if (total == 0) {
    fail(Errc::budget_exceeded, std::to_string(rule.q()) + "^" + std::to_string(group.order()) +
                                    " configurations exceed the budget of " + std::to_string(budget));
  }
  return total;
}

// Image index of every configuration, in counter order.
std::vector<std::uint64_t> image_table(const LocalRule& rule, const FiniteGroup& group, std::uint64_t total) {
  std::vector<std::uint64_t> images(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const FiniteConfig x = config_from_index(idx, rule.q(), group.order());
    images[idx] = config_index(apply_finite(rule, group, x), rule.q());
  }
  return images;
}

}  // namespace

PropertyReportFinite analyze_finite(const LocalRule& rule, const FiniteGroup& group, std::uint64_t budget) {
  const std::uint64_t total = config_count(rule, group, budget);
  const std::size_t n = group.order();
  const std::uint32_t q = rule.q();

  constexpr std::uint64_t kUnseen = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> first_preimage(total, kUnseen);
  PropertyReportFinite report;
  report.injective = true;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const FiniteConfig x = config_from_index(idx, q, n);
    const std::uint64_t image = config_index(apply_finite(rule, group, x), q);
    if (first_preimage[image] == kUnseen) {
      first_preimage[image] = idx;
    } else if (report.injective) {
      report.injective = false;
      report.collision.emplace(config_from_index(first_preimage[image], q, n), x);
    }
  }

  report.surjective = true;
  for (std::uint64_t idx = total; idx-- > 0;) {
    if (first_preimage[idx] == kUnseen) {
      report.surjective = false;
      report.orphan = config_from_index(idx, q, n);
      break;
    }
  }

  report.pre_injective = report.injective;
  report.post_surjective = report.surjective;
  report.bijective = report.injective && report.surjective;
  if (report.injective != report.surjective) {
    // A self-map of a finite set is injective iff surjective.
    fail(Errc::internal, "finite decider found injective != surjective");
  }
  return report;
}

LocalRule invert_exhaustive(const LocalRule& rule, const FiniteGroup& group, std::uint64_t budget) {
  const std::uint64_t total = config_count(rule, group, budget);
  const std::size_t n = group.order();
  const std::uint32_t q = rule.q();
  const std::vector<std::uint64_t> images = image_table(rule, group, total);

  // preimage_of[image index] = configuration index
  std::vector<std::uint64_t> preimage_of(total, std::numeric_limits<std::uint64_t>::max());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (preimage_of[images[idx]] != std::numeric_limits<std::uint64_t>::max()) {
      fail(Errc::not_bijective, "two configurations share an image");
    }
    preimage_of[images[idx]] = idx;
  }

  // Table entry for the memory word (y(0), ..., y(n-1)) is tau^-1(y)(identity);
  // the word's first cell is the most significant digit.
  std::vector<Offset> memory(n);
  for (std::size_t g = 0; g < n; ++g) memory[g] = static_cast<Offset>(g);
  return LocalRule::from_function(q, memory, [&](std::span<const Symbol> word) {
    const FiniteConfig y{std::vector<Symbol>(word.begin(), word.end())};
    const FiniteConfig x = config_from_index(preimage_of[config_index(y, q)], q, n);
    return x.cells[group.identity()];
  });
}

std::vector<FiniteConfig> sequential_correction(const LocalRule& rule, const FiniteGroup& group,
                                                const FiniteConfig& x, const FiniteConfig& y,
                                                std::uint64_t budget) {
  const std::uint64_t total = config_count(rule, group, budget);
  const std::size_t n = group.order();
  const std::uint32_t q = rule.q();
  if (x.size() != n || y.size() != n) fail(Errc::invalid_argument, "configurations are not over the group");

  const std::vector<std::uint64_t> images = image_table(rule, group, total);
  {
    std::vector<bool> hit(total, false);
    for (std::uint64_t image : images) hit[image] = true;
    for (bool h : hit) {
      if (!h) fail(Errc::not_surjective, "the rule is not surjective over this group");
    }
  }

  std::vector<FiniteConfig> steps{x};
  const FiniteConfig start_image = apply_finite(rule, group, x);
  for (ElementId g : diff(start_image, y)) {
    const FiniteConfig& previous = steps.back();
    FiniteConfig target = apply_finite(rule, group, previous);
    target.cells[g] = y.cells[g];
    const std::uint64_t target_index = config_index(target, q);

    std::optional<FiniteConfig> best;
    std::size_t best_distance = n + 1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (images[idx] != target_index) continue;
      FiniteConfig candidate = config_from_index(idx, q, n);
      const std::size_t distance = diff(candidate, previous).size();
      if (distance < best_distance) {
        best_distance = distance;
        best = std::move(candidate);
      }
    }
    if (!best) fail(Errc::correction_step_failed, "no configuration corrects cell " + std::to_string(g));
    steps.push_back(std::move(*best));
  }
  if (apply_finite(rule, group, steps.back()) != y) {
    fail(Errc::correction_step_failed, "final image differs from the target");
  }
  return steps;
}

}  // namespace calab
