#include "hyperrank/codes.hpp"

#include <algorithm>

#include "hyperrank/errors.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/residue.hpp"
#include "hyperrank/segre.hpp"

namespace hyperrank {

namespace {

void require_code_degree(int d) {
  if (d < 3 || d % 2 == 0) throw DomainError("code layer needs odd d >= 3");
  if (d > 20) throw CapacityError("code layer limited to d <= 20");
}

}  // namespace

Gf2Poly theta_poly(const DiffSet& s, const FieldSpec& spec) {
  if (s.d > 20) throw CapacityError("theta polynomial limited to d <= 20");
  return characteristic_poly(s, spec);
}

Gf2Poly theta_poly(const DiffSet& s) { return theta_poly(s, make_field(s.d)); }

std::vector<std::uint64_t> predicted_nonzeros(int d) {
  require_code_degree(d);
  CyclicModulus m(d);
  std::vector<std::uint64_t> out{0};
  for (auto a : segre_solutions(d)) out.push_back(m.reduce(-5 * static_cast<std::int64_t>(a)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CyclicCodeInfo code_info(int d) {
  require_code_degree(d);
  FieldSpec spec = make_field(d);
  CyclicCodeInfo info;
  info.d = d;
  info.n = spec.order();
  info.generator = gcd(Gf2Poly::cyclic_modulus(info.n), theta_poly(tau_image(6, spec), spec));
  info.dimension = info.n - static_cast<std::uint64_t>(info.generator.degree());
  info.nonzero_exponents = predicted_nonzeros(d);
  return info;
}

std::uint64_t bch_run(const CyclicCodeInfo& info) {
  std::uint64_t t = 0;
  while (t + 1 < info.n &&
         !std::binary_search(info.nonzero_exponents.begin(), info.nonzero_exponents.end(), t + 1))
    ++t;
  return t;
}

std::uint64_t bch_run(int d) { return bch_run(code_info(d)); }

FieldElem power_sum(const DiffSet& s, const FieldSpec& spec, std::uint64_t u) {
  FieldElem acc = spec.zero();
  for (auto x : s.elements) acc = acc + spec.pow({x}, u);
  return acc;
}

std::vector<std::uint64_t> trace_criterion_exponents(int d) {
  require_code_degree(d);
  CyclicModulus m(d);
  std::vector<std::uint64_t> out;
  for (auto a : segre_solutions(d))
    if (coset_leader(a, m) == a) out.push_back(mulmod(5, a, m.value()));
  std::sort(out.begin(), out.end());
  return out;
}

SexticCriterion::SexticCriterion(const FieldSpec& spec)
    : spec_(spec), exps_(trace_criterion_exponents(spec.degree())) {}

bool SexticCriterion::solvable(FieldElem beta) const {
  if (beta.is_zero()) throw DomainError("beta must be nonzero");
  FieldElem acc = spec_.zero();
  for (auto e : exps_) acc = acc + spec_.pow(beta, e);
  return spec_.trace(acc) == 0;
}

bool sextic_solvable(const FieldSpec& spec, FieldElem beta) { return SexticCriterion(spec).solvable(beta); }

int sextic_root_count(const FieldSpec& spec, FieldElem beta) {
  int roots = 0;
  for (std::uint64_t v = 0; v < spec.size(); ++v) {
    FieldElem x{static_cast<std::uint32_t>(v)};
    FieldElem x2 = spec.square(x);
    FieldElem x6 = spec.mul(spec.square(x2), x2);
    roots += (x6 + x + beta).is_zero();
  }
  return roots;
}

}  // namespace hyperrank
