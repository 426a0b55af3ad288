#include <doctest.h>

#include "hyperrank/errors.hpp"
#include "hyperrank/gf2poly.hpp"
#include "oracles.hpp"

using namespace hyperrank;

namespace {

Gf2Poly random_poly(int max_deg) {
  auto& g = oracle::rng();
  Gf2Poly p;
  for (int i = 0; i <= max_deg; ++i)
    if (g() & 1) p.set(static_cast<std::uint64_t>(i));
  return p;
}

// Schoolbook product on exponent sets.
Gf2Poly naive_mul(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r;
  for (auto i : a.exponents())
    for (auto j : b.exponents()) r.flip(i + j);
  return r;
}

}  // namespace

TEST_CASE("construction and degree") {
  CHECK(Gf2Poly().is_zero());
  CHECK(Gf2Poly().degree() == -1);
  CHECK(Gf2Poly::monomial(100).degree() == 100);
  CHECK(Gf2Poly::cyclic_modulus(7).exponents() == std::vector<std::uint64_t>{0, 7});
  CHECK(Gf2Poly::all_ones(5).weight() == 5);
  std::vector<std::uint64_t> e{3, 0, 130};
  auto p = Gf2Poly::from_exponents(e);
  CHECK(p.degree() == 130);
  CHECK(p.coeff(3));
  CHECK_FALSE(p.coeff(4));
  p.flip(130);
  CHECK(p.degree() == 3);
}

TEST_CASE("hex round trip, bit 0 is the constant term") {
  CHECK(Gf2Poly::from_exponents(std::vector<std::uint64_t>{0, 1, 9}).to_hex() == "203");
  CHECK(Gf2Poly().to_hex() == "0");
  for (int t = 0; t < 50; ++t) {
    auto p = random_poly(300);
    CHECK(Gf2Poly::from_hex(p.to_hex()) == p);
  }
  CHECK_THROWS_AS(Gf2Poly::from_hex("12g"), InputError);
}

TEST_CASE("ring laws on random polynomials") {
  for (int t = 0; t < 40; ++t) {
    auto a = random_poly(150), b = random_poly(90), c = random_poly(70);
    CHECK(a * b == naive_mul(a, b));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + a).is_zero());
    Gf2Poly sh = a;
    sh.add_shifted(b, 77);
    CHECK(sh == a + b * Gf2Poly::monomial(77));
  }
}

TEST_CASE("division with remainder") {
  for (int t = 0; t < 40; ++t) {
    auto a = random_poly(200), m = random_poly(60);
    if (m.is_zero()) continue;
    auto r = a.mod(m);
    CHECK(r.degree() < m.degree());
    auto q = random_poly(30);
    CHECK((q * m + r).mod(m) == r);
  }
  CHECK_THROWS_AS(Gf2Poly::monomial(3).mod(Gf2Poly()), DomainError);
}

TEST_CASE("gcd divides both and has the common factor") {
  for (int t = 0; t < 40; ++t) {
    auto f = random_poly(40), a = random_poly(80), b = random_poly(80);
    if (f.is_zero()) continue;
    auto g = gcd(f * a, f * b);
    CHECK((f * a).mod(g).is_zero());
    CHECK((f * b).mod(g).is_zero());
    CHECK(g.mod(f).is_zero());
  }
  // x^15 − 1 = product of all irreducibles of degree dividing 4
  auto g = gcd(Gf2Poly::cyclic_modulus(15), Gf2Poly::cyclic_modulus(5));
  CHECK(g == Gf2Poly::cyclic_modulus(5));
}

TEST_CASE("matrix rank matches the row-reduction oracle") {
  auto& g = oracle::rng();
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + g() % 70, c = 1 + g() % 140;
    Gf2Matrix m(r, c);
    std::vector<std::vector<bool>> rows(r, std::vector<bool>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (g() % 3 == 0) m.set(i, j), rows[i][j] = true;
    CHECK(m.rank() == oracle::rank(rows));
  }
}
