#include <doctest.h>

#include "hyperrank/diffset.hpp"
#include "hyperrank/errors.hpp"
#include "hyperrank/residue.hpp"
#include "oracles.hpp"

using namespace hyperrank;

namespace {

std::vector<std::uint64_t> exponents_of(const DiffSet& s, const FieldSpec& f) {
  auto log = oracle::logs(f.generator().bits, f.modulus(), f.degree());
  std::vector<std::uint64_t> out;
  for (auto x : s.elements) out.push_back(log[x]);
  return out;
}

bool oracle_check(const DiffSet& s, const FieldSpec& f) {
  auto p = hadamard_params(f.degree());
  return s.elements.size() == p.k && oracle::is_difference_set(exponents_of(s, f), p.v, p.lambda);
}

}  // namespace

TEST_CASE("hadamard parameters") {
  CHECK(hadamard_params(9) == DiffSetParams{511, 255, 127});
  CHECK(hadamard_params(2) == DiffSetParams{3, 1, 0});
}

TEST_CASE("family exponents") {
  CHECK(family_exponent({FamilyKind::Regular}, 7) == 2);
  CHECK(family_exponent({FamilyKind::Translation, 3}, 7) == 8);
  CHECK(family_exponent({FamilyKind::Segre}, 9) == 6);
  // σ + γ: d=7 → 16 + 4, d=9 → 32 + 128
  CHECK(family_exponent({FamilyKind::GlynnI}, 7) == 20);
  CHECK(family_exponent({FamilyKind::GlynnI}, 9) == 160);
  CHECK(family_exponent({FamilyKind::GlynnII}, 11) == 3 * 64 + 4);
  CHECK_THROWS_AS(family_exponent({FamilyKind::Segre}, 8), DomainError);
  CHECK_THROWS_AS(family_exponent({FamilyKind::Translation, 3}, 9), DomainError);
  CHECK(parse_family("glynn2").kind == FamilyKind::GlynnII);
  CHECK_THROWS_AS(parse_family("cherowitzo"), InputError);
  CHECK(family_name(parse_family("segre")) == "segre");
}

TEST_CASE("hyperoval test agrees with the two-to-one oracle") {
  for (int d = 2; d <= 8; ++d) {
    FieldSpec f = make_field(d);
    for (std::uint64_t k = 2; k < f.order(); ++k)
      REQUIRE_MESSAGE(is_monomial_hyperoval(k, d) == oracle::hyperoval(k, f.modulus(), d), "k=", k, " d=", d);
  }
  for (int d : {9, 11, 13})
    for (auto kind : {FamilyKind::Segre, FamilyKind::GlynnI, FamilyKind::GlynnII})
      CHECK(is_monomial_hyperoval(family_exponent({kind}, d), d));
  CHECK_FALSE(is_monomial_hyperoval(6, 4));
}

TEST_CASE("tau image equals the oracle image") {
  for (int d : {3, 5, 7, 9}) {
    FieldSpec f = make_field(d);
    DiffSet s = tau_image(6, f);
    std::set<std::uint32_t> want;
    for (std::uint32_t x = 0; x < f.size(); ++x) want.insert(x ^ oracle::fpow(x, 6, f.modulus(), d));
    want.erase(0);
    CHECK(std::vector<std::uint32_t>(want.begin(), want.end()) == s.elements);
    CHECK(std::holds_alternative<HyperovalTau>(s.provenance));
  }
  CHECK_THROWS_AS(tau_image(6, 4), DomainError);
}

TEST_CASE("every family is a difference set under the oracle") {
  for (int d = 2; d <= 11; ++d) {
    FieldSpec f = make_field(d);
    CHECK(oracle_check(singer_set(f), f));
    if (is_prime_u64(f.order())) CHECK(oracle_check(qr_set(f), f));
    for (int u = 2; u < d; ++u) {
      if (d % u) continue;
      for (std::uint64_t r = 2; r < (std::uint64_t{1} << u) - 1; ++r)
        if (gmw_admissible(u, d / u, r)) CHECK(oracle_check(gmw_set(u, d / u, r, f), f));
    }
    for (std::uint64_t k = 2; k < f.order() && k < 300; ++k)
      if (is_monomial_hyperoval(k, d)) {
        DiffSet s = tau_image(k, f);
        REQUIRE(oracle_check(s, f));
        REQUIRE(verify_difference_set(s, f));
      }
  }
}

TEST_CASE("verification rejects broken sets") {
  FieldSpec f = make_field(7);
  DiffSet s = singer_set(f);
  CHECK(verify_difference_set(s, f));
  s.elements.back() ^= 1;
  std::sort(s.elements.begin(), s.elements.end());
  CHECK_FALSE(verify_difference_set(s, f));
  s.elements.pop_back();
  CHECK_FALSE(verify_difference_set(s, f));
  CHECK_THROWS_AS(verify_difference_set(singer_set(17)), CapacityError);
  CHECK(verify_difference_set(singer_set(17), 17));
}

TEST_CASE("gmw admissibility") {
  CHECK(gmw_admissible(3, 2, 3));
  CHECK_FALSE(gmw_admissible(3, 2, 2));  // power of two
  CHECK_FALSE(gmw_admissible(2, 3, 2));
  CHECK_FALSE(gmw_admissible(4, 2, 5));  // gcd(5, 15) = 5
  CHECK(gmw_admissible(4, 2, 7));
  CHECK_THROWS_AS(gmw_set(4, 2, 5), DomainError);
  CHECK(std::get<GmwTag>(gmw_set(4, 2, 7).provenance).w == 3);
}

TEST_CASE("qr sets need a Mersenne prime") {
  CHECK_THROWS_AS(qr_set(4), DomainError);
  CHECK(qr_set(5).elements.size() == 15);
}

TEST_CASE("exponent class") {
  // 6, 1/6, −5, −1/5, 6/5, 5/6 mod 31
  auto c = exponent_class(6, 5);
  std::set<std::uint64_t> want;
  for (std::uint64_t x = 1; x < 31; ++x) {
    if (x * 6 % 31 == 1) want.insert(x);
    if (x * 5 % 31 == 30) want.insert(x);
    if (x * 5 % 31 == 6) want.insert(x);
    if (x * 6 % 31 == 5) want.insert(x);
  }
  want.insert(6);
  want.insert(26);
  CHECK(c == std::vector<std::uint64_t>(want.begin(), want.end()));
  CHECK_THROWS_AS(exponent_class(4, 4), DomainError);
}

TEST_CASE("multipliers and complements preserve the design") {
  FieldSpec f = make_field(9);
  DiffSet s = tau_image(6, f);
  for (std::uint64_t t : {2, 5, 13, 510}) {
    DiffSet m = apply_multiplier(s, t, f);
    CHECK(oracle_check(m, f));
  }
  CHECK(apply_multiplier(s, 2, f).elements == s.elements);  // Frobenius fixes the image of τ
  CHECK_THROWS_AS(apply_multiplier(s, 7, f), DomainError);
  DiffSet c = complement(s);
  CHECK(c.elements.size() == 256);
  CHECK(c.params == DiffSetParams{511, 256, 128});
  CHECK(verify_difference_set(c, f));
}
