#include <gtest/gtest.h>

#include "calab/deciders_finite.hpp"
#include "calab/error.hpp"
#include "calab/gf2lab.hpp"
#include "calab/transport.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace calab;

namespace {

std::vector<std::string> rows(const BitMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    std::string s;
    for (std::size_t c = 0; c < m.dimension(); ++c) s += m.get(r, c) ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

IntMatrix random_int_matrix(gen::Gen& g, std::size_t n, std::int64_t bound) {
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = static_cast<long>(g.integer(-bound, bound));
  }
  return m;
}

}  // namespace

TEST(Circulant, Examples) {
  EXPECT_EQ(rows(circulant({4, {1, 1, 1}})), (std::vector<std::string>{"1110", "0111", "1011", "1101"}));
  EXPECT_EQ(circulant({3, {1}}), BitMatrix::identity(3));
  const auto c7 = circulant({7, {1, 1, 1}});
  EXPECT_EQ(rows(c7)[5], "1000011");
}

TEST(Circulant, DegreeMustBeBelowSize) { EXPECT_THROW(circulant({2, {1, 1, 1}}), Error); }

TEST(DetGf2, Examples) {
  for (std::size_t n : {1u, 5u, 64u, 65u, 130u}) EXPECT_EQ(det_gf2(BitMatrix::identity(n)), 1) << n;
  EXPECT_EQ(det_gf2(circulant({4, {1, 1, 1}})), 1);
  EXPECT_EQ(det_gf2(BitMatrix(6)), 0);
}

TEST(DetGf2, VanishesWhenThreeDividesTheSize) {
  for (std::size_t n : {3u, 6u, 9u, 12u}) EXPECT_EQ(det_gf2(circulant({n, {1, 1, 1}})), 0) << n;
}

TEST(DetInt, Examples) {
  EXPECT_EQ(det_int(circulant_int({4, {1, 1, 1}})), 3);
  EXPECT_EQ(det_int(circulant_int({7, {1, 1, 1}})), 3);
  EXPECT_EQ(det_int(IntMatrix::from_bits(BitMatrix::identity(9))), 1);
  EXPECT_EQ(det_int(circulant_int({4, {1, 1, 1}})), oracle::leibniz(circulant_int({4, {1, 1, 1}})));
  EXPECT_EQ(det_int(circulant_int({7, {1, 1, 1}})), oracle::leibniz(circulant_int({7, {1, 1, 1}})));
}

TEST(DetInt, DimensionBound) {
  try {
    det_int(IntMatrix(65));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_bound);
  }
  EXPECT_EQ(det_int(IntMatrix::from_bits(BitMatrix::identity(65)), 80), 1);
}

TEST(DetInt, MatchesLeibniz) {
  gen::for_all(71, 150, [](gen::Gen& g, int) {
    const auto m = random_int_matrix(g, static_cast<std::size_t>(g.integer(1, 6)), 4);
    EXPECT_EQ(det_int(m), oracle::leibniz(m));
  });
}

TEST(DetInt, NeedsRowSwaps) {
  IntMatrix m(3);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(2, 2) = 5;
  EXPECT_EQ(det_int(m), -5);
}

TEST(DetGf2, AgreesWithDetIntModTwo) {
  gen::for_all(72, 200, [](gen::Gen& g, int) {
    const auto n = static_cast<std::size_t>(g.integer(1, 12));
    BitMatrix b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) b.set(r, c, g.coin());
    }
    mpz_class d = det_int(IntMatrix::from_bits(b));
    mpz_class parity = d % 2;
    if (parity < 0) parity += 2;
    EXPECT_EQ(det_gf2(b), parity.get_si());
  });
}

TEST(IsAdditive, Examples) {
  EXPECT_TRUE(is_additive(LocalRule::rule150w()));
  EXPECT_FALSE(is_additive(LocalRule(2, {0, 1}, {0, 0, 0, 1})));
  EXPECT_TRUE(is_additive(LocalRule::constant()));
  EXPECT_FALSE(is_additive(LocalRule::constant(2, 1)));
  EXPECT_THROW(is_additive(LocalRule::identity(3)), Error);
}

TEST(IsAdditive, ExactlyTheEightLinearElementaryRules) {
  int count = 0;
  for (std::uint32_t n = 0; n < 256; ++n) count += is_additive(LocalRule::elementary(n));
  EXPECT_EQ(count, 8);  // subsets of {x, y, z}
}

TEST(LinearCaToCirculant, Examples) {
  EXPECT_EQ(linear_ca_to_circulant(LocalRule::identity(), 5), BitMatrix::identity(5));
  EXPECT_EQ(linear_ca_to_circulant(LocalRule::rule150w(), 4), circulant({4, {1, 1, 1}}));
  EXPECT_EQ(linear_ca_to_circulant(LocalRule(2, {0, 1}, {0, 1, 1, 0}), 6), circulant({6, {1, 1}}));
  try {
    linear_ca_to_circulant(LocalRule(2, {0, 1}, {0, 0, 0, 1}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_additive);
  }
}

TEST(LinearCaToCirculant, BridgeOnRandomVectors) {
  gen::for_all(73, 40, [](gen::Gen& g, int) {
    // Random additive rule: a random subset of offsets in [-3, 3].
    std::vector<Offset> memory;
    for (Offset m = -3; m <= 3; ++m) {
      if (g.coin()) memory.push_back(m);
    }
    if (memory.empty()) memory.push_back(0);
    const auto rule = LocalRule::from_function(2, memory, [](std::span<const Symbol> w) {
      Symbol s = 0;
      for (Symbol v : w) s ^= v;
      return s;
    });
    const auto n = g.integer(1, 12);
    const auto matrix = linear_ca_to_circulant(rule, n);
    const auto induced = induce_quotient_ca(rule, CyclicQuotientMapZ(n));
    const auto group = make_cyclic(n);
    for (int i = 0; i < 100; ++i) {
      const FiniteConfig x{g.word(2, static_cast<std::size_t>(n))};
      EXPECT_EQ(matrix.apply(x.cells), apply_finite(induced, group, x).cells);
    }
  });
}

TEST(DetGf2, BijectivityBridge) {
  for (std::uint32_t n = 0; n < 256; ++n) {
    const auto rule = LocalRule::elementary(n);
    if (!is_additive(rule)) continue;
    for (std::int64_t m = 1; m <= 12; ++m) {
      const bool invertible = det_gf2(linear_ca_to_circulant(rule, m)) == 1;
      const auto induced = induce_quotient_ca(rule, CyclicQuotientMapZ(m));
      EXPECT_EQ(invertible, analyze_finite(induced, make_cyclic(m)).bijective) << n << " mod " << m;
    }
  }
}

TEST(DetGf2, CirculantFamilyIsInvertible) {
  for (std::size_t n = 1; n <= 64; ++n) EXPECT_EQ(det_gf2(circulant({3 * n + 1, {1, 1, 1}})), 1) << n;
}
