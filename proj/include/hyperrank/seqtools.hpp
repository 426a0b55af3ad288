#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperrank/bigint.hpp"

namespace hyperrank {

// Σ_{i=0}^{k} coeffs[i]·f_{n−i} = constant for all n >= start.
struct Recurrence {
  std::vector<BigInt> coeffs;
  BigInt constant = 0;
  int start = 0;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt residual(std::span<const BigInt> terms, int n) const;
  bool holds_at(std::span<const BigInt> terms, int n) const { return residual(terms, n) == 0; }
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// numerator / denominator in ascending powers of z.
struct RationalSeries {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;
};

// Index up to which a recurrence has to be checked so that it holds forever,
// given a rational generating function with deg num <= P and deg den <= Q.
int certification_bound(const Recurrence& rec, int P, int Q);
// Checks n = start .. certification_bound; throws InputError if terms are too short.
bool certify_recurrence(std::span<const BigInt> terms, const Recurrence& rec, int P, int Q);

std::vector<BigInt> expand_series(const RationalSeries& gf, int m);

// Minimal-order integer recurrence (homogeneous before inhomogeneous at each order)
// fitting every supplied term; start is set to the order.
std::optional<Recurrence> guess_recurrence(std::span<const BigInt> terms, int max_order);

// Largest real root of Σ coeffs[i]·z^i, assumed real, simple and > 1.
double dominant_root(std::span<const BigInt> coeffs, double tol = 1e-12);

// Exact integer polynomial helpers (ascending powers).
std::vector<BigInt> poly_mul(std::span<const BigInt> a, std::span<const BigInt> b);
// True when b divides a over the rationals.
bool poly_divides(std::span<const BigInt> b, std::span<const BigInt> a);

std::vector<BigInt> to_bigints(std::span<const long long> v);
std::string recurrence_to_string(const Recurrence& r);

}  // namespace hyperrank
