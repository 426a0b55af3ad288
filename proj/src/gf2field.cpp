#include "hyperrank/gf2field.hpp"

#include <cstdio>

#include "hyperrank/errors.hpp"
#include "hyperrank/residue.hpp"

namespace hyperrank {

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  std::uint64_t x = a;
  for (std::uint32_t m = b; m; m &= m - 1) r ^= x << __builtin_ctz(m);
  return r;
}

namespace {

std::uint64_t reduce(std::uint64_t r, std::uint64_t f, int deg) {
  while (r >> deg) {
    int top = 63 - __builtin_clzll(r);
    r ^= f << (top - deg);
  }
  return r;
}

int poly_degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = reduce(a, b, poly_degree(b));
    std::swap(a, b);
  }
  return a;
}

std::uint32_t frobenius_power(std::uint32_t x, int times, std::uint64_t f, int deg) {
  for (int i = 0; i < times; ++i) x = polymulmod(x, x, f, deg);
  return x;
}

}  // namespace

std::uint32_t polymulmod(std::uint32_t a, std::uint32_t b, std::uint64_t f, int deg) {
  return static_cast<std::uint32_t>(reduce(clmul(a, b), f, deg));
}

bool is_irreducible(std::uint64_t poly) {
  int d = poly_degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  if ((poly & 1) == 0) return false;
  std::uint32_t x = 2 % static_cast<std::uint32_t>(poly);
  if (frobenius_power(x, d, poly, d) != x) return false;
  for (auto p : prime_divisors(static_cast<std::uint64_t>(d))) {
    std::uint32_t y = frobenius_power(x, d / static_cast<int>(p), poly, d);
    if (poly_gcd(poly, y ^ x) != 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(int d, std::uint64_t modulus, std::uint32_t generator)
    : d_(d), modulus_(modulus), generator_(generator) {
  if (d < kMinDegree || d > kMaxDegree) throw DomainError("field degree must lie in [2, 28]");
  if (poly_degree(modulus) != d || !is_irreducible(modulus))
    throw DomainError("modulus is not an irreducible polynomial of degree " + std::to_string(d));
  if (!contains({generator}) || generator == 0 || element_order({generator}) != order())
    throw DomainError("generator is not a primitive element");
  // Tr is linear, so it is determined by its values on the basis x^i.
  for (int i = 0; i < d; ++i) {
    FieldElem b{std::uint32_t{1} << i};
    FieldElem acc = b, t = b;
    for (int j = 1; j < d; ++j) {
      t = square(t);
      acc = acc + t;
    }
    if (acc.bits > 1) throw InternalError("trace left the prime field");
    trace_mask_ |= acc.bits << i;
  }
}

FieldElem FieldSpec::pow(FieldElem x, std::uint64_t e) const {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = square(x);
    e >>= 1;
  }
  return r;
}

FieldElem FieldSpec::inverse(FieldElem x) const {
  if (x.is_zero()) throw DomainError("zero has no inverse");
  return pow(x, order() - 1);
}

std::uint64_t FieldSpec::element_order(FieldElem x) const {
  if (x.is_zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t n = order();
  for (auto p : prime_divisors(n)) {
    while (n % p == 0 && pow(x, n / p) == one()) n /= p;
  }
  return n;
}

namespace {

std::uint64_t smallest_irreducible(int d) {
  for (std::uint64_t f = (std::uint64_t{1} << d) | 1; f < (std::uint64_t{1} << (d + 1)); f += 2)
    if (is_irreducible(f)) return f;
  throw InternalError("no irreducible polynomial found");
}

void check_degree(int d) {
  if (d < FieldSpec::kMinDegree || d > FieldSpec::kMaxDegree)
    throw DomainError("field degree must lie in [2, 28], got " + std::to_string(d));
}

}  // namespace

FieldSpec make_field(int d) {
  check_degree(d);
  std::uint64_t f = smallest_irreducible(d);
  std::uint64_t n = (std::uint64_t{1} << d) - 1;
  auto primes = prime_divisors(n);
  for (std::uint32_t g = 2; g < (std::uint32_t{1} << d); ++g) {
    bool primitive = true;
    for (auto p : primes) {
      std::uint32_t r = 1, b = g;
      for (std::uint64_t e = n / p; e; e >>= 1) {
        if (e & 1) r = polymulmod(r, b, f, d);
        b = polymulmod(b, b, f, d);
      }
      if (r == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return FieldSpec(d, f, g);
  }
  throw InternalError("no primitive element found");
}

FieldSpec make_field_with_generator(int d, std::uint32_t generator) {
  check_degree(d);
  return FieldSpec(d, smallest_irreducible(d), generator);
}

std::string to_hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
  return buf;
}

LogTable::LogTable(const FieldSpec& spec) : order_(spec.order()) {
  if (spec.degree() > kMaxDegree)
    throw CapacityError("log table limited to d <= 24, got " + std::to_string(spec.degree()));
  log_.assign(spec.size(), 0);
  exp_.resize(order_);
  FieldElem x = spec.one();
  for (std::uint64_t i = 0; i < order_; ++i) {
    exp_[i] = x.bits;
    log_[x.bits] = static_cast<std::uint32_t>(i);
    x = spec.mul(x, spec.generator());
  }
  if (x != spec.one()) throw InternalError("generator is not primitive");
}

std::uint32_t LogTable::log(FieldElem x) const {
  if (x.is_zero()) throw DomainError("log of zero is undefined");
  return log_.at(x.bits);
}

}  // namespace hyperrank
