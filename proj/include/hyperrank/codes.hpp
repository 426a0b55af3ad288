#pragma once

#include <cstdint>
#include <vector>

#include "hyperrank/diffset.hpp"
#include "hyperrank/gf2field.hpp"
#include "hyperrank/gf2poly.hpp"

namespace hyperrank {

struct CyclicCodeInfo {
  int d = 0;
  std::uint64_t n = 0;
  Gf2Poly generator;
  std::uint64_t dimension = 0;
  std::vector<std::uint64_t> nonzero_exponents;  // sorted residues mod n
};

// Σ_j b_j x^j with b_j = 1 iff generator^j ∈ S; d <= 20.
Gf2Poly theta_poly(const DiffSet& s, const FieldSpec& spec);
Gf2Poly theta_poly(const DiffSet& s);

// Code spanned by the development of the Segre-exponent set, odd d in [3, 20].
CyclicCodeInfo code_info(int d);
// Nonzeros predicted from the solution set: {0} ∪ {−5a}.
std::vector<std::uint64_t> predicted_nonzeros(int d);
// Largest t such that exponents 1..t are all zeros of the code.
std::uint64_t bch_run(int d);
std::uint64_t bch_run(const CyclicCodeInfo& info);

// Σ_{x ∈ S} x^u, i.e. θ(generator^u) over GF(2^d).
FieldElem power_sum(const DiffSet& s, const FieldSpec& spec, std::uint64_t u);

// {5a mod n : a a coset leader of the Segre solutions}, sorted.
std::vector<std::uint64_t> trace_criterion_exponents(int d);

// Tr(Σ_{e ∈ J′} β^e) = 0, which holds iff x^6 + x + β has two roots in the field.
class SexticCriterion {
 public:
  explicit SexticCriterion(const FieldSpec& spec);
  bool solvable(FieldElem beta) const;
  const std::vector<std::uint64_t>& exponents() const { return exps_; }

 private:
  FieldSpec spec_;
  std::vector<std::uint64_t> exps_;
};

bool sextic_solvable(const FieldSpec& spec, FieldElem beta);
// Number of x in the field with x^6 + x + β = 0, by exhaustion.
int sextic_root_count(const FieldSpec& spec, FieldElem beta);

}  // namespace hyperrank
