#pragma once

// Slow reference implementations, written independently of the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t cyc(int d) { return (std::uint64_t{1} << d) - 1; }

// Binary digit count of a mod 2^d−1 via a string.
inline int s(std::uint64_t a, int d) {
  std::uint64_t n = cyc(d);
  std::uint64_t r = a % n;
  std::string bits;
  for (int i = 0; i < d; ++i) bits += (r >> i & 1) ? '1' : '0';
  return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

inline int s_star(std::uint64_t a, int d) { return a % cyc(d) == 0 ? d : s(a, d); }

// Polynomial multiplication mod f, shift-and-add.
inline std::uint32_t fmul(std::uint32_t a, std::uint32_t b, std::uint64_t f, int d) {
  std::uint64_t acc = 0, x = a;
  for (int i = 0; i < d; ++i) {
    if (b >> i & 1) acc ^= x;
    x <<= 1;
    if (x >> d & 1) x ^= f;
  }
  return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t fpow(std::uint32_t a, std::uint64_t e, std::uint64_t f, int d) {
  std::uint32_t r = 1;
  for (; e; e >>= 1, a = fmul(a, a, f, d))
    if (e & 1) r = fmul(r, a, f, d);
  return r;
}

// Discrete logs by walking the powers of g.
inline std::vector<std::uint64_t> logs(std::uint32_t g, std::uint64_t f, int d) {
  std::vector<std::uint64_t> log(std::size_t{1} << d, ~std::uint64_t{0});
  std::uint32_t x = 1;
  for (std::uint64_t e = 0; e < cyc(d); ++e, x = fmul(x, g, f, d)) log[x] = e;
  return log;
}

// x ↦ x + x^k is two-to-one on the field and gcd(k, 2^d−1) = 1.
inline bool hyperoval(std::uint64_t k, std::uint64_t f, int d) {
  std::uint64_t n = cyc(d), a = k % n, b = n;
  while (b) std::tie(a, b) = std::pair{b, a % b};
  if (a != 1) return false;
  std::vector<int> hits(std::size_t{1} << d, 0);
  for (std::uint32_t x = 0; x < (1u << d); ++x) ++hits[x ^ fpow(x, k, f, d)];
  for (int h : hits)
    if (h != 0 && h != 2) return false;
  return true;
}

// Irreducibility by trial division by every polynomial of degree 1..deg/2.
inline bool irreducible(std::uint64_t f) {
  int deg = 63 - __builtin_clzll(f);
  if (deg < 1) return false;
  for (std::uint64_t g = 2; g < (std::uint64_t{1} << (deg / 2 + 1)); ++g) {
    int gd = 63 - __builtin_clzll(g);
    if (gd == 0 || gd > deg / 2) continue;
    std::uint64_t r = f;
    for (int i = deg; i >= gd; --i)
      if (r >> i & 1) r ^= g << (i - gd);
    if (r == 0) return false;
  }
  return true;
}

// Powers of g until 1; the order of g in the multiplicative group.
inline std::uint64_t order(std::uint32_t g, std::uint64_t f, int d) {
  std::uint32_t x = g;
  std::uint64_t k = 1;
  while (x != 1) {
    x = fmul(x, g, f, d);
    ++k;
    if (k > cyc(d)) return 0;
  }
  return k;
}

// GF(2) rank of a 0/1 matrix by row reduction on vector<bool> rows.
inline std::size_t rank(std::vector<std::vector<bool>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] != rows[r][j];
    ++r;
  }
  return r;
}

// Circulant whose row i is `first` shifted right by i.
inline std::size_t circulant_rank(const std::vector<bool>& first) {
  std::size_t n = first.size();
  std::vector<std::vector<bool>> rows(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][(j + i) % n] = first[j];
  return rank(rows);
}

// Number of a in (0, n) with s(a) + s((k−1)a) = s(ka) + 1, skipping undefined terms.
inline std::uint64_t digit_count(std::uint64_t k, int d) {
  std::uint64_t n = cyc(d), total = 0;
  for (std::uint64_t a = 1; a < n; ++a) {
    std::uint64_t y = (k - 1) % n * a % n, z = k % n * a % n;
    if (y == 0 || z == 0) continue;
    if (s(a, d) + s(y, d) == s(z, d) + 1) ++total;
  }
  return total;
}

// Every nonzero residue mod v occurs lambda times as a difference of exponents.
inline bool is_difference_set(const std::vector<std::uint64_t>& exps, std::uint64_t v, std::uint64_t lambda) {
  std::vector<std::uint64_t> count(v, 0);
  for (auto x : exps)
    for (auto y : exps)
      if (x != y) ++count[(x + v - y) % v];
  for (std::uint64_t r = 1; r < v; ++r)
    if (count[r] != lambda) return false;
  return true;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240613);
  return g;
}

}  // namespace oracle
