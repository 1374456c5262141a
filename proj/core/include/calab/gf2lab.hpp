#pragma once

// Linear automata over the two-element field: circulant matrices, GF(2) and
// exact-integer determinants, additivity of binary local rules.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "calab/ca_core.hpp"

namespace calab {

/// Square matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n = 0);
  static BitMatrix identity(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);

  /// M v over GF(2).
  std::vector<Symbol> apply(const std::vector<Symbol>& v) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  friend int det_gf2(BitMatrix m);
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}
  static IntMatrix from_bits(const BitMatrix& m);

  std::size_t dimension() const noexcept { return n_; }
  mpz_class& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const mpz_class& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

 private:
  std::size_t n_;
  std::vector<mpz_class> entries_;
};

/// f(x) = c_0 + c_1 x + ... + c_d x^d acting on Z/nZ; requires d < n.
struct CirculantSpec {
  std::size_t n = 1;
  std::vector<Symbol> coefficients;
};

/// Row k holds c_j at column (k + j) mod n. Coefficients are read mod 2.
BitMatrix circulant(const CirculantSpec& spec);
/// Same shape with the coefficients as integers.
IntMatrix circulant_int(const CirculantSpec& spec);

int det_gf2(BitMatrix m);

inline constexpr std::size_t kDefaultDeterminantBound = 64;

/// Fraction-free (Bareiss) elimination. Throws DimensionBound beyond `bound`.
mpz_class det_int(const IntMatrix& m, std::size_t bound = kDefaultDeterminantBound);

/// mu(u xor v) = mu(u) xor mu(v) for all memory words, and mu(0) = 0.
/// Throws InvalidArgument unless q = 2.
bool is_additive(const LocalRule& rule);

/// Matrix of the induced automaton on Z/nZ acting on coordinate vectors;
/// cross-checked against apply_finite on every basis vector. Throws
/// NotAdditive.
BitMatrix linear_ca_to_circulant(const LocalRule& rule, std::int64_t n);

}  // namespace calab
