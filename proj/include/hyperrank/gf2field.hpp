#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperrank {

// Element of GF(2^d) in the polynomial basis; bit i is the coefficient of x^i.
struct FieldElem {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
  friend constexpr FieldElem operator+(FieldElem x, FieldElem y) { return {x.bits ^ y.bits}; }
};

// Carry-less product of two polynomials of degree < 32.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);
// a * b mod f, where f has degree deg and a, b are already reduced.
std::uint32_t polymulmod(std::uint32_t a, std::uint32_t b, std::uint64_t f, int deg);
bool is_irreducible(std::uint64_t poly);

class FieldSpec {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 28;

  // Validates that modulus is irreducible of degree d and generator is primitive.
  FieldSpec(int d, std::uint64_t modulus, std::uint32_t generator);

  int degree() const { return d_; }
  std::uint64_t modulus() const { return modulus_; }
  FieldElem generator() const { return {generator_}; }
  std::uint64_t order() const { return (std::uint64_t{1} << d_) - 1; }
  std::uint64_t size() const { return std::uint64_t{1} << d_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  bool contains(FieldElem x) const { return (x.bits >> d_) == 0; }

  FieldElem mul(FieldElem x, FieldElem y) const { return {polymulmod(x.bits, y.bits, modulus_, d_)}; }
  FieldElem square(FieldElem x) const { return mul(x, x); }
  FieldElem pow(FieldElem x, std::uint64_t e) const;
  FieldElem inverse(FieldElem x) const;
  int trace(FieldElem x) const { return __builtin_parity(x.bits & trace_mask_); }
  std::uint64_t element_order(FieldElem x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.d_ == b.d_ && a.modulus_ == b.modulus_ && a.generator_ == b.generator_;
  }

 private:
  int d_;
  std::uint64_t modulus_;
  std::uint32_t generator_;
  std::uint32_t trace_mask_ = 0;
};

// Smallest irreducible modulus and smallest primitive element for degree d.
FieldSpec make_field(int d);
// Same modulus as make_field(d), caller-chosen primitive element.
FieldSpec make_field_with_generator(int d, std::uint32_t generator);

std::string to_hex(std::uint64_t v);

// Discrete logarithm to the base of spec.generator(); d <= 24.
class LogTable {
 public:
  static constexpr int kMaxDegree = 24;
  explicit LogTable(const FieldSpec& spec);

  std::uint32_t log(FieldElem x) const;
  FieldElem exp(std::uint64_t e) const { return {exp_[e % order_]}; }
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t order_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

}  // namespace hyperrank
