#pragma once

#include <cstdint>
#include <vector>

namespace hyperrank {

// Residues modulo n = 2^d - 1.
class CyclicModulus {
 public:
  explicit CyclicModulus(int d);

  int degree() const { return d_; }
  std::uint64_t value() const { return n_; }
  std::uint64_t reduce(std::int64_t a) const;
  std::uint64_t reduce_u(std::uint64_t a) const { return a % n_; }
  // Multiplication by 2 is a cyclic left shift of the d-bit word.
  std::uint64_t rotate(std::uint64_t a, int by = 1) const;

 private:
  int d_;
  std::uint64_t n_;
};

// Binary digit sum of a mod n; rejects a ≡ 0.
int digit_sum(std::int64_t a, const CyclicModulus& m);
// digit_sum extended by the value d on multiples of n.
int extended_digit_sum(std::int64_t a, const CyclicModulus& m);
// Σ_i (⌊2^i k a/n⌋ − ⌊2^i a/n⌋ − ⌊2^i (k−1) a/n⌋); throws InternalError if it differs
// from digit_sum(a) + digit_sum((k−1)a) − digit_sum(ka).
std::int64_t floor_identity(std::int64_t a, std::int64_t k, const CyclicModulus& m);

struct DigitProfile {
  std::uint64_t base;
  std::vector<std::uint32_t> digits;  // least significant first
};
DigitProfile base_p_digits(std::uint64_t x, std::uint64_t p);
int base_p_digit_sum(std::uint64_t x, std::uint64_t p, std::uint64_t modulus);

// Orbits of {1..n-1} under doubling, each sorted, ordered by minimum.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(const CyclicModulus& m);
std::vector<std::uint64_t> coset_of(std::uint64_t a, const CyclicModulus& m);
std::uint64_t coset_leader(std::uint64_t a, const CyclicModulus& m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n);
// Throws DomainError when gcd(a, n) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t n);
bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace hyperrank
