#include <doctest.h>

#include "hyperrank/codes.hpp"
#include "hyperrank/errors.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/residue.hpp"
#include "hyperrank/segre.hpp"
#include "oracles.hpp"

using namespace hyperrank;

TEST_CASE("theta polynomial") {
  FieldSpec f = make_field(9);
  DiffSet s = tau_image(6, f);
  Gf2Poly t = theta_poly(s, f);
  CHECK(t.weight() == 255);
  for (auto j : t.exponents()) {
    std::uint32_t x = oracle::fpow(f.generator().bits, j, f.modulus(), 9);
    CHECK(std::binary_search(s.elements.begin(), s.elements.end(), x));
  }
  DiffSet one{5, {1}, hadamard_params(5), ExplicitListTag{}};
  CHECK(theta_poly(one) == Gf2Poly::monomial(0));
  DiffSet all{5, {}, hadamard_params(5), ExplicitListTag{}};
  for (std::uint32_t x = 1; x < 32; ++x) all.elements.push_back(x);
  CHECK(theta_poly(all) == Gf2Poly::all_ones(31));
}

TEST_CASE("code of the Segre set at d=9") {
  auto info = code_info(9);
  CHECK(info.n == 511);
  CHECK(info.dimension == 82);
  CHECK(bch_run(9) == 42);
  CHECK(bch_run(info) / 2 == 21);
  CHECK(Gf2Poly::cyclic_modulus(511).mod(info.generator).is_zero());
  // nonzeros: 0 and the cosets of −5 times the nine seeds
  CyclicModulus m(9);
  std::set<std::uint64_t> want{0};
  for (std::uint64_t a : {1, 5, 21, 85, 13, 53, 77, 167, 103})
    for (auto x : coset_of(m.reduce(-5 * static_cast<std::int64_t>(a)), m)) want.insert(x);
  CHECK(std::vector<std::uint64_t>(want.begin(), want.end()) == info.nonzero_exponents);
}

TEST_CASE("predicted nonzeros are the actual nonzeros") {
  for (int d = 3; d <= 11; d += 2) {
    FieldSpec f = make_field(d);
    DiffSet s = tau_image(6, f);
    auto info = code_info(d);
    std::vector<std::uint64_t> actual;
    for (std::uint64_t u = 0; u < info.n; ++u) {
      FieldElem v = power_sum(s, f, u);
      REQUIRE(v.bits <= 1);  // θ(α^u) is 0 or 1
      if (v.bits) actual.push_back(u);
    }
    CHECK(actual == info.nonzero_exponents);
    CHECK(info.dimension == actual.size());
    CHECK(info.dimension == 1 + count_digit_solutions(6, d));
    CHECK(info.dimension == rank_diffset(s, f).rank_set);
    CyclicModulus m(d);
    for (auto u : actual) CHECK(std::binary_search(actual.begin(), actual.end(), m.rotate(u)));
    // direct membership scan for the run
    std::uint64_t t = 0;
    while (t + 1 < info.n && power_sum(s, f, t + 1).is_zero()) ++t;
    CHECK(bch_run(info) == t);
  }
  CHECK(code_info(5).dimension == 16);
  CHECK_THROWS_AS(code_info(8), DomainError);
  CHECK_THROWS_AS(code_info(21), CapacityError);
}

TEST_CASE("trace criterion exponents at d=9") {
  CyclicModulus m(9);
  std::set<std::uint64_t> got, want;
  for (auto e : trace_criterion_exponents(9)) got.insert(coset_leader(e, m));
  for (std::uint64_t e : {1, 5, 7, 9, 19, 25, 37, 77, 117}) want.insert(coset_leader(e, m));
  CHECK(got == want);
}

TEST_CASE("sextic criterion agrees with root counting") {
  for (int d = 3; d <= 13; d += 2) {
    FieldSpec f = make_field(d);
    SexticCriterion crit(f);
    std::uint64_t solvable = 0;
    for (std::uint32_t b = 1; b < f.size(); ++b) {
      int roots = sextic_root_count(f, {b});
      REQUIRE((roots == 0 || roots == 2));
      REQUIRE(crit.solvable({b}) == (roots == 2));
      solvable += roots == 2;
    }
    CHECK(solvable == (std::uint64_t{1} << (d - 1)) - 1);
  }
  CHECK_THROWS_AS(sextic_solvable(make_field(9), {0}), DomainError);
}

TEST_CASE("quadratic analogue: x^2 + x + b has roots iff Tr(b) = 0") {
  for (int d = 2; d <= 12; ++d) {
    FieldSpec f = make_field(d);
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      int roots = 0;
      for (std::uint32_t x = 0; x < f.size(); ++x) roots += (f.square({x}) + FieldElem{x} + FieldElem{b}).is_zero();
      CHECK((roots == 2) == (f.trace({b}) == 0));
    }
  }
}
