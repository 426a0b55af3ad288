#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>

namespace hyperrank {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt big_from_i64(std::int64_t v) {
  BigInt r = big_from_u64(v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v));
  if (v < 0) r = -r;
  return r;
}

inline std::optional<std::uint64_t> big_to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace hyperrank

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline int digits10() { return 0; }
  static inline Real dummy_precision() { return 0; }
};

}  // namespace Eigen
