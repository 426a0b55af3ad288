#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hyperrank/bigint.hpp"
#include "hyperrank/diffset.hpp"
#include "hyperrank/gf2poly.hpp"

namespace hyperrank {

enum class RankMethod { DigitCount, CirculantGcd, DenseElimination };
std::string method_name(RankMethod m);

struct RankReport {
  int d = 0;
  std::string tag;
  std::uint64_t rank_set = 0;
  std::uint64_t rank_complement = 0;
  RankMethod method = RankMethod::CirculantGcd;
};

// #{0 < a < 2^d−1 : s(a) + s((k−1)a) = s(ka) + 1}; k and k−1 must be units mod 2^d−1.
std::uint64_t count_digit_solutions(std::uint64_t k, int d);
// No unit requirement: a where (k−1)a or ka vanishes mod 2^d−1 are skipped.
std::uint64_t count_digit_solutions_defined(std::uint64_t k, int d);
// Same count with a caller-supplied digit-sum; used to show a faulty s is detected.
std::uint64_t count_digit_solutions_with(std::uint64_t k, int d, const std::function<int(std::uint64_t)>& s);

// Rank over GF(2) of the n×n circulant with first row `row`: n − deg gcd(row, x^n − 1).
std::uint64_t circulant_rank(const Gf2Poly& row, std::uint64_t n);
std::uint64_t dense_circulant_rank(const Gf2Poly& row, std::uint64_t n);

// Indicator of S indexed by exponent of spec.generator().
Gf2Poly characteristic_poly(const DiffSet& s, const FieldSpec& spec);

RankReport rank_diffset(const DiffSet& s, RankMethod method = RankMethod::CirculantGcd);
RankReport rank_diffset(const DiffSet& s, const FieldSpec& spec, RankMethod method = RankMethod::CirculantGcd);

// C(p+d−2, d−1)^s + 1: p-rank of the Singer set over GF(p^s).
BigInt singer_rank(std::uint64_t p, int s, int d);
// #{0 < x < q^d − 1 : (q−1) | x, base-p digit sum of x = (p−1)s}, q = p^s.
std::uint64_t singer_rank_count(std::uint64_t p, int s, int d);

}  // namespace hyperrank
