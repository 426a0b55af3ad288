#include "hyperrank/residue.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "hyperrank/errors.hpp"

namespace hyperrank {

CyclicModulus::CyclicModulus(int d) : d_(d) {
  if (d < 1 || d > 62) throw DomainError("cyclic modulus degree out of range: " + std::to_string(d));
  n_ = (std::uint64_t{1} << d) - 1;
}

std::uint64_t CyclicModulus::reduce(std::int64_t a) const {
  std::int64_t n = static_cast<std::int64_t>(n_);
  std::int64_t r = a % n;
  return static_cast<std::uint64_t>(r < 0 ? r + n : r);
}

std::uint64_t CyclicModulus::rotate(std::uint64_t a, int by) const {
  a %= n_;
  by %= d_;
  if (by < 0) by += d_;
  if (by == 0) return a;
  return ((a << by) | (a >> (d_ - by))) & n_;
}

int digit_sum(std::int64_t a, const CyclicModulus& m) {
  std::uint64_t r = m.reduce(a);
  if (r == 0) throw DomainError("digit sum undefined on multiples of 2^d-1");
  return __builtin_popcountll(r);
}

int extended_digit_sum(std::int64_t a, const CyclicModulus& m) {
  std::uint64_t r = m.reduce(a);
  return r == 0 ? m.degree() : __builtin_popcountll(r);
}

std::int64_t floor_identity(std::int64_t a, std::int64_t k, const CyclicModulus& m) {
  if (k < 2) throw DomainError("floor identity needs k >= 2");
  const __int128 n = m.value();
  const __int128 ra = m.reduce(a);
  const __int128 y = (k - 1) * ra;
  const __int128 z = k * ra;
  if (ra == 0 || y % n == 0 || z % n == 0)
    throw DomainError("floor identity needs a, (k-1)a and ka nonzero mod 2^d-1");
  std::int64_t total = 0;
  for (int i = 0; i < m.degree(); ++i) {
    __int128 p = static_cast<__int128>(1) << i;
    total += static_cast<std::int64_t>(p * z / n - p * ra / n - p * y / n);
  }
  std::int64_t expect = __builtin_popcountll(static_cast<std::uint64_t>(ra)) +
                        __builtin_popcountll(static_cast<std::uint64_t>(y % n)) -
                        __builtin_popcountll(static_cast<std::uint64_t>(z % n));
  if (total != expect) throw InternalError("floor identity mismatch");
  return total;
}

DigitProfile base_p_digits(std::uint64_t x, std::uint64_t p) {
  if (p < 2) throw DomainError("digit base must be at least 2");
  DigitProfile out{p, {}};
  while (x) {
    out.digits.push_back(static_cast<std::uint32_t>(x % p));
    x /= p;
  }
  return out;
}

int base_p_digit_sum(std::uint64_t x, std::uint64_t p, std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  std::uint64_t r = x % modulus;
  if (r == 0) throw DomainError("digit sum undefined on multiples of the modulus");
  int s = 0;
  for (auto dgt : base_p_digits(r, p).digits) s += static_cast<int>(dgt);
  return s;
}

std::vector<std::uint64_t> coset_of(std::uint64_t a, const CyclicModulus& m) {
  a %= m.value();
  std::vector<std::uint64_t> out{a};
  for (std::uint64_t b = m.rotate(a); b != a; b = m.rotate(b)) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t coset_leader(std::uint64_t a, const CyclicModulus& m) {
  a %= m.value();
  std::uint64_t best = a;
  std::uint64_t b = a;
  for (int i = 1; i < m.degree(); ++i) {
    b = m.rotate(b);
    best = std::min(best, b);
  }
  return best;
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(const CyclicModulus& m) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<bool> seen(m.value(), false);
  for (std::uint64_t a = 1; a < m.value(); ++a) {
    if (seen[a]) continue;
    auto c = coset_of(a, m);
    for (auto x : c) seen[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(n), nr = static_cast<std::int64_t>(a % n);
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::pair{nt, t - q * nt};
    std::tie(r, nr) = std::pair{nr, r - q * nr};
  }
  if (r != 1) throw DomainError(std::to_string(a) + " is not invertible mod " + std::to_string(n));
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace hyperrank
