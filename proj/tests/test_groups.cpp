#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "calab/error.hpp"
#include "calab/groups.hpp"

using namespace calab;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// S3 as permutations of {0,1,2}, composed right to left.
FiniteGroup symmetric3() {
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::vector<ElementId> mul;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      std::array<int, 3> c{a[b[0]], a[b[1]], a[b[2]]};
      mul.push_back(static_cast<ElementId>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  }
  return FiniteGroup::from_table(6, mul);
}

}  // namespace

TEST(MakeCyclic, Trivial) {
  const auto g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.mul(0, 0), 0u);
}

TEST(MakeCyclic, OrderFour) {
  const auto g = make_cyclic(4);
  EXPECT_EQ(g.mul(3, 2), 1u);
  EXPECT_EQ(g.inv(3), 1u);
}

TEST(MakeCyclic, AxiomsHoldExhaustively) {
  for (std::int64_t m = 1; m <= 12; ++m) EXPECT_TRUE(make_cyclic(m).axioms_hold()) << m;
}

TEST(MakeCyclic, RejectsZero) {
  try {
    make_cyclic(0);
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}

TEST(FromTable, RejectsNonAssociativeTable) {
  // A Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<ElementId> mul{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup::from_table(5, mul), Error);
}

TEST(SubgroupGenerated, Examples) {
  const auto g = make_cyclic(6);
  const std::vector<ElementId> two{2};
  EXPECT_EQ(subgroup_generated(g, two), (std::vector<ElementId>{0, 2, 4}));
  EXPECT_EQ(subgroup_generated(g, std::vector<ElementId>{}), (std::vector<ElementId>{0}));
  const std::vector<ElementId> two_three{2, 3};
  EXPECT_EQ(subgroup_generated(g, two_three), (std::vector<ElementId>{0, 1, 2, 3, 4, 5}));
}

TEST(CosetDecomposition, Examples) {
  const auto g = make_cyclic(6);
  const std::vector<ElementId> h{0, 2, 4};
  const auto table = coset_decomposition(g, h);
  EXPECT_EQ(table.representatives, (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(table.coset_of[5], 1u);

  const std::vector<ElementId> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(coset_decomposition(g, all).representatives, (std::vector<ElementId>{0}));
  const std::vector<ElementId> trivial{0};
  EXPECT_EQ(coset_decomposition(g, trivial).representatives, all);
}

TEST(CosetDecomposition, PartitionsTheGroup) {
  const auto s3 = symmetric3();
  for (ElementId gen = 0; gen < 6; ++gen) {
    const std::vector<ElementId> gens{gen};
    const auto h = subgroup_generated(s3, gens);
    const auto table = coset_decomposition(s3, h);
    std::vector<ElementId> seen;
    for (ElementId rep : table.representatives) {
      for (ElementId x : table.coset(rep)) seen.push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, (std::vector<ElementId>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(table.representatives.size() * h.size(), 6u);
    EXPECT_EQ(table.representatives.front(), s3.identity());
  }
}

TEST(CosetDecomposition, RejectsNonSubgroup) {
  const std::vector<ElementId> bad{0, 1};
  try {
    coset_decomposition(make_cyclic(6), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_subgroup);
  }
}

TEST(QuotientBy, Examples) {
  const auto g = make_cyclic(6);
  const std::vector<ElementId> h{0, 3};
  const auto [k, hom] = quotient_by(g, h);
  EXPECT_EQ(k.order(), 3u);
  EXPECT_TRUE(hom.is_homomorphism());
  EXPECT_TRUE(hom.is_surjective());
  EXPECT_EQ(hom.kernel(), h);

  const std::vector<ElementId> trivial{0};
  const auto [same, id] = quotient_by(g, trivial);
  EXPECT_EQ(same.order(), 6u);
  for (ElementId a = 0; a < 6; ++a) EXPECT_EQ(id(a), a);

  const auto c4 = make_cyclic(4);
  const std::vector<ElementId> all{0, 1, 2, 3};
  EXPECT_EQ(quotient_by(c4, all).first.order(), 1u);
}

TEST(QuotientBy, RejectsNonNormalSubgroup) {
  const auto s3 = symmetric3();
  const std::vector<ElementId> gens{3};
  const auto h = subgroup_generated(s3, gens);
  ASSERT_EQ(h.size(), 2u);
  try {
    quotient_by(s3, h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_normal);
  }
}

TEST(QuotientBy, NormalSubgroupOfS3) {
  const auto s3 = symmetric3();
  const std::vector<ElementId> gens{1};
  const auto a3 = subgroup_generated(s3, gens);
  const auto [k, hom] = quotient_by(s3, a3);
  EXPECT_EQ(k.order(), 2u);
  EXPECT_TRUE(hom.is_homomorphism());
  EXPECT_EQ(hom.kernel(), a3);
}

TEST(CyclicQuotientMapZ, NonNegativeRemainder) {
  const CyclicQuotientMapZ map(5);
  EXPECT_EQ(map(-1), 4u);
  EXPECT_EQ(map(-10), 0u);
  EXPECT_EQ(map(12), 2u);
  EXPECT_TRUE(map.in_kernel(-15));
  EXPECT_THROW(CyclicQuotientMapZ(0), Error);
}

TEST(WindowInjective, Examples) {
  const auto window = range(-5, 5);
  EXPECT_TRUE(window_injective(CyclicQuotientMapZ(11), window));
  EXPECT_FALSE(window_injective(CyclicQuotientMapZ(7), window));
  EXPECT_FALSE(window_injective(CyclicQuotientMapZ(4), window));
  const std::vector<std::int64_t> zero{0};
  EXPECT_TRUE(window_injective(CyclicQuotientMapZ(1), zero));
}
