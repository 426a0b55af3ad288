#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hyperrank {

// Polynomial over GF(2), packed 64 coefficients per word; bit i is the coefficient of x^i.
class Gf2Poly {
 public:
  static constexpr std::int64_t kZeroDegree = -1;

  Gf2Poly() = default;
  static Gf2Poly monomial(std::uint64_t e);
  static Gf2Poly from_exponents(std::span<const std::uint64_t> exps);
  // x^n - 1 (= x^n + 1 over GF(2)).
  static Gf2Poly cyclic_modulus(std::uint64_t n);
  static Gf2Poly all_ones(std::uint64_t n);
  static Gf2Poly from_hex(const std::string& hex);

  std::int64_t degree() const { return degree_; }
  bool is_zero() const { return degree_ < 0; }
  bool coeff(std::uint64_t i) const;
  void set(std::uint64_t i, bool v = true);
  void flip(std::uint64_t i);
  std::uint64_t weight() const;
  std::vector<std::uint64_t> exponents() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  Gf2Poly& operator+=(const Gf2Poly& o);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) { return a.words_ == b.words_; }

  // this += o * x^shift
  void add_shifted(const Gf2Poly& o, std::uint64_t shift);
  Gf2Poly mod(const Gf2Poly& m) const;
  // Big-endian hex of the integer encoding, lowercase, no prefix; "0" for zero.
  std::string to_hex() const;

 private:
  void normalize();

  std::vector<std::uint64_t> words_;
  std::int64_t degree_ = kZeroDegree;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

// Dense GF(2) matrix with packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v = true);
  // Gaussian elimination on a copy.
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_, stride_;
  std::vector<std::uint64_t> data_;
};

}  // namespace hyperrank
