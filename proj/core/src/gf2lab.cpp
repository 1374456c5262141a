#include "calab/gf2lab.hpp"

#include <bit>
#include <string>
#include <utility>

#include "calab/error.hpp"
#include "calab/transport.hpp"

namespace calab {

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
  return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  std::uint64_t& word = bits_[row * words_ + col / 64];
  const std::uint64_t mask = std::uint64_t{1} << (col % 64);
  word = value ? (word | mask) : (word & ~mask);
}

std::vector<Symbol> BitMatrix::apply(const std::vector<Symbol>& v) const {
  if (v.size() != n_) fail(Errc::invalid_argument, "vector length differs from the matrix dimension");
  std::vector<Symbol> out(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) {
    Symbol acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc ^= (get(r, c) && (v[c] & 1U)) ? 1U : 0U;
    out[r] = acc;
  }
  return out;
}

IntMatrix IntMatrix::from_bits(const BitMatrix& m) {
  IntMatrix out(m.dimension());
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    for (std::size_t c = 0; c < m.dimension(); ++c) out.at(r, c) = m.get(r, c) ? 1 : 0;
  }
  return out;
}

namespace {

void check_spec(const CirculantSpec& spec) {
  if (spec.n == 0) fail(Errc::invalid_argument, "circulant size must be positive");
  if (spec.coefficients.size() > spec.n) {
    fail(Errc::invalid_argument, "polynomial degree must be below the circulant size");
  }
}

}  // namespace

BitMatrix circulant(const CirculantSpec& spec) {
  check_spec(spec);
  BitMatrix m(spec.n);
  for (std::size_t k = 0; k < spec.n; ++k) {
    for (std::size_t j = 0; j < spec.coefficients.size(); ++j) {
      if (spec.coefficients[j] & 1U) m.set(k, (k + j) % spec.n, true);
    }
  }
  return m;
}

IntMatrix circulant_int(const CirculantSpec& spec) {
  check_spec(spec);
  IntMatrix m(spec.n);
  for (std::size_t k = 0; k < spec.n; ++k) {
    for (std::size_t j = 0; j < spec.coefficients.size(); ++j) m.at(k, (k + j) % spec.n) = spec.coefficients[j];
  }
  return m;
}

int det_gf2(BitMatrix m) {
  const std::size_t n = m.n_;
  const std::size_t words = m.words_;
  auto row = [&](std::size_t r) { return m.bits_.data() + r * words; };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !m.get(pivot, col)) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) std::swap_ranges(row(pivot), row(pivot) + words, row(col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (!m.get(r, col)) continue;
      for (std::size_t w = col / 64; w < words; ++w) row(r)[w] ^= row(col)[w];
    }
  }
  return 1;
}

mpz_class det_int(const IntMatrix& input, std::size_t bound) {
  const std::size_t n = input.dimension();
  if (n > bound) {
    fail(Errc::dimension_bound,
         "dimension " + std::to_string(n) + " exceeds the determinant bound " + std::to_string(bound));
  }
  if (n == 0) return 1;
  IntMatrix a = input;
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class value = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a.at(i, j) = std::move(value);
      }
    }
    previous = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

bool is_additive(const LocalRule& rule) {
  if (rule.q() != 2) fail(Errc::invalid_argument, "additivity is defined for binary rules");
  const auto& table = rule.table();
  if (table[0] != 0) return false;
  // Additive iff the table is the XOR of its values on unit words.
  const std::size_t k = rule.arity();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    Symbol expected = 0;
    for (std::size_t bit = 0; bit < k; ++bit) {
      if ((idx >> bit) & 1U) expected ^= table[std::size_t{1} << bit];
    }
    if (table[idx] != expected) return false;
  }
  return true;
}

BitMatrix linear_ca_to_circulant(const LocalRule& rule, std::int64_t n) {
  if (n < 1) fail(Errc::invalid_argument, "modulus must be positive");
  if (!is_additive(rule)) fail(Errc::not_additive, "the rule is not a mod-2 sum of its inputs");
  const CyclicQuotientMapZ map(n);
  const std::size_t size = static_cast<std::size_t>(n);

  // Coefficient of memory cell i is mu at the unit word with a 1 in cell i;
  // cells that collide modulo n add up.
  std::vector<Symbol> coefficients(size, 0);
  const std::size_t k = rule.arity();
  for (std::size_t i = 0; i < k; ++i) {
    const Symbol c = rule.table()[std::size_t{1} << (k - 1 - i)];
    coefficients[static_cast<std::size_t>(map(rule.memory()[i]))] ^= c;
  }
  BitMatrix m(size);
  for (std::size_t row = 0; row < size; ++row) {
    for (std::size_t j = 0; j < size; ++j) {
      if (coefficients[j]) m.set(row, (row + j) % size, true);
    }
  }

  const LocalRule induced = induce_quotient_ca(rule, map);
  const FiniteGroup group = make_cyclic(n);
  for (std::size_t b = 0; b < size; ++b) {
    FiniteConfig e{std::vector<Symbol>(size, 0)};
    e.cells[b] = 1;
    if (m.apply(e.cells) != apply_finite(induced, group, e).cells) {
      fail(Errc::internal, "circulant disagrees with the induced automaton on basis vector " + std::to_string(b));
    }
  }
  return m;
}

}  // namespace calab
