#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperrank/gf2poly.hpp"
#include "hyperrank/seqtools.hpp"

namespace hyperrank {

// counts[j] = #{x ≠ 0 : generator^j = x^k + x^{k−1}}.
struct CountRow {
  std::uint64_t k = 0;
  int d = 0;
  std::vector<std::uint32_t> counts;
  std::uint64_t zeros = 0;  // #{x ≠ 0 : x^k + x^{k−1} = 0}
};

CountRow preimage_row(std::uint64_t k, int d);

// #{0 < a < 2^d−1 : s(a) + s((k−1)a) = s*(ka)}; a with (k−1)a ≡ 0 counted as solutions.
std::uint64_t count_circulant_solutions(std::uint64_t k, int d);

// Rank over GF(2) of the count circulant reduced mod 2, and of its 0/1 support.
std::uint64_t rank_count_matrix(std::uint64_t k, int d);
std::uint64_t rank_support_matrix(std::uint64_t k, int d);
std::uint64_t rank_count_matrix_dense(std::uint64_t k, int d);
std::uint64_t rank_support_matrix_dense(std::uint64_t k, int d);

// root count -> number of c ≠ 0 such that x^k + x^{k−1} + c has that many roots.
std::map<std::uint32_t, std::uint64_t> root_profile(std::uint64_t k, int d);

// Block-language description of the solution words for k in 3..9.
struct WordLanguage {
  // Union of components; each component is a block alphabet, starred.
  std::vector<std::vector<std::string>> components;
  // Blocks 0001(01)^j, j >= 0, in every component listed here (k = 9 only).
  std::vector<int> periodic_components;
  bool exclude_all_zero = false;
};
WordLanguage word_language(std::uint64_t k);
// Number of length-d cyclic words (rotations counted separately) in the language.
std::uint64_t word_count(std::uint64_t k, int d);
// The same words as integers (most significant digit first), sorted; d <= 20.
std::vector<std::uint64_t> word_solutions(std::uint64_t k, int d);

// The closed-form generating function Σ_{d>=2} R_k(d) z^d for k in 3..9.
RationalSeries circulant_gf(std::uint64_t k);

}  // namespace hyperrank
