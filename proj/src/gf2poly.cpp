#include "hyperrank/gf2poly.hpp"

#include <algorithm>

#include "hyperrank/errors.hpp"

namespace hyperrank {

Gf2Poly Gf2Poly::monomial(std::uint64_t e) {
  Gf2Poly p;
  p.set(e);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::uint64_t> exps) {
  Gf2Poly p;
  for (auto e : exps) p.flip(e);
  return p;
}

Gf2Poly Gf2Poly::cyclic_modulus(std::uint64_t n) {
  Gf2Poly p = monomial(n);
  p.flip(0);
  return p;
}

Gf2Poly Gf2Poly::all_ones(std::uint64_t n) {
  Gf2Poly p;
  if (n == 0) return p;
  p.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64) p.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  p.normalize();
  return p;
}

Gf2Poly Gf2Poly::from_hex(const std::string& hex) {
  Gf2Poly p;
  std::uint64_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    char c = *it;
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw InputError(std::string("bad hex digit '") + c + "'");
    for (int j = 0; j < 4; ++j)
      if (v >> j & 1) p.set(bit + j);
  }
  return p;
}

bool Gf2Poly::coeff(std::uint64_t i) const {
  std::uint64_t w = i / 64;
  return w < words_.size() && (words_[w] >> (i % 64) & 1);
}

void Gf2Poly::set(std::uint64_t i, bool v) {
  if (coeff(i) != v) flip(i);
}

void Gf2Poly::flip(std::uint64_t i) {
  std::uint64_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (i % 64);
  normalize();
}

std::uint64_t Gf2Poly::weight() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

std::vector<std::uint64_t> Gf2Poly::exponents() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::uint64_t b = words_[w]; b; b &= b - 1) out.push_back(w * 64 + __builtin_ctzll(b));
  return out;
}

void Gf2Poly::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
  degree_ = words_.empty() ? kZeroDegree
                           : static_cast<std::int64_t>((words_.size() - 1) * 64 + 63 -
                                                       __builtin_clzll(words_.back()));
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  add_shifted(o, 0);
  return *this;
}

void Gf2Poly::add_shifted(const Gf2Poly& o, std::uint64_t shift) {
  if (o.is_zero()) return;
  std::size_t ws = shift / 64;
  unsigned bs = shift % 64;
  std::size_t need = ws + o.words_.size() + (bs ? 1 : 0);
  if (words_.size() < need) words_.resize(need, 0);
  std::uint64_t* dst = words_.data() + ws;
  const std::uint64_t* src = o.words_.data();
  std::size_t m = o.words_.size();
  if (bs == 0) {
    for (std::size_t j = 0; j < m; ++j) dst[j] ^= src[j];
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      dst[j] ^= src[j] << bs;
      dst[j + 1] ^= src[j] >> (64 - bs);
    }
  }
  normalize();
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r;
  for (auto e : b.exponents()) r.add_shifted(a, e);
  return r;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& m) const {
  if (m.is_zero()) throw DomainError("polynomial reduction by zero");
  Gf2Poly r = *this;
  while (r.degree_ >= m.degree_) r.add_shifted(m, static_cast<std::uint64_t>(r.degree_ - m.degree_));
  return r;
}

std::string Gf2Poly::to_hex() const {
  if (is_zero()) return "0";
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::uint64_t nibbles = static_cast<std::uint64_t>(degree_) / 4 + 1;
  out.reserve(nibbles);
  for (std::uint64_t i = nibbles; i-- > 0;) {
    unsigned v = 0;
    for (int j = 0; j < 4; ++j) v |= static_cast<unsigned>(coeff(4 * i + j)) << j;
    out.push_back(digits[v]);
  }
  return out;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    a = a.mod(b);
    std::swap(a, b);
  }
  return a;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return data_[r * stride_ + c / 64] >> (c % 64) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t& w = data_[r * stride_ + c / 64];
  std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::size_t Gf2Matrix::rank() const {
  std::vector<std::uint64_t> m = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t w = c / 64;
    std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * stride_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + pivot * stride_, m.begin() + (pivot + 1) * stride_,
                       m.begin() + rank * stride_);
    const std::uint64_t* prow = m.data() + rank * stride_;
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* row = m.data() + r * stride_;
      if (!(row[w] & bit)) continue;
      for (std::size_t j = w; j < stride_; ++j) row[j] ^= prow[j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace hyperrank
