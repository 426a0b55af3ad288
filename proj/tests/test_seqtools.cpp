#include <doctest.h>

#include "hyperrank/errors.hpp"
#include "hyperrank/glynn.hpp"
#include "hyperrank/segre.hpp"
#include "hyperrank/seqtools.hpp"

using namespace hyperrank;

namespace {

std::vector<BigInt> fib_terms(int count) {
  std::vector<BigInt> f(count);
  for (int i = 0; i < count; ++i) f[i] = i < 2 ? BigInt(1) : BigInt(f[i - 1] + f[i - 2]);
  return f;
}

Recurrence rec(std::vector<long long> c, long long constant, int start) {
  return {to_bigints(c), big_from_i64(constant), start};
}

}  // namespace

TEST_CASE("residuals and holds_at") {
  auto f = fib_terms(20);
  Recurrence r = rec({1, -1, -1}, 0, 2);
  CHECK(r.order() == 2);
  for (int n = 2; n < 20; ++n) CHECK(r.holds_at(f, n));
  CHECK_THROWS_AS(r.residual(f, 1), InputError);
  CHECK_THROWS_AS(r.residual(f, 20), InputError);
}

TEST_CASE("certification bound and checking") {
  Recurrence r = rec({1, -1, -1}, 0, 2);
  CHECK(certification_bound(r, 1, 2) == 4);
  CHECK(certification_bound(r, 10, 2) == 13);
  auto f = fib_terms(20);
  CHECK(certify_recurrence(f, r, 10, 2));
  f[13] += 1;
  CHECK_FALSE(certify_recurrence(f, r, 10, 2));
  CHECK(certify_recurrence(std::span(f).first(13), r, 1, 2));
  CHECK_THROWS_AS(certify_recurrence(std::span(f).first(13), r, 10, 2), InputError);
  CHECK_THROWS_AS(certify_recurrence(f, rec({1, -1, -1}, 0, 1), 1, 2), InputError);
  CHECK_THROWS_AS(certify_recurrence(f, rec({0, -1, -1}, 0, 2), 1, 2), InputError);
}

TEST_CASE("series expansion") {
  RationalSeries fib{to_bigints(std::vector<long long>{1}), to_bigints(std::vector<long long>{1, -1, -1})};
  CHECK(expand_series(fib, 19) == fib_terms(20));
  RationalSeries neg{to_bigints(std::vector<long long>{2}), to_bigints(std::vector<long long>{-1, 1})};
  auto e = expand_series(neg, 5);  // −2/(1−z)
  for (const auto& x : e) CHECK(x == -2);
  CHECK_THROWS_AS(expand_series({{BigInt(1)}, to_bigints(std::vector<long long>{2, 1})}, 4), DomainError);
}

TEST_CASE("guessing finds Fibonacci and the Segre recurrence") {
  auto g = guess_recurrence(fib_terms(15), 4);
  REQUIRE(g);
  CHECK(*g == rec({1, -1, -1}, 0, 2));
  // odd-d Segre counts: f_n = f_{n−1} + f_{n−2} + 1
  std::vector<BigInt> a6;
  for (int d = 3; d <= 41; d += 2) a6.push_back(segre_orbit_count(d));
  g = guess_recurrence(a6, 5);
  REQUIRE(g);
  CHECK(*g == rec({1, -1, -1}, 1, 2));
}

TEST_CASE("guessing recovers the Glynn recurrences") {
  auto s2 = glynn_orbit_sequence(2, 61);
  auto g = guess_recurrence(std::span(s2).subspan(4), 6);
  REQUIRE(g);
  CHECK(g->coeffs == to_bigints(std::vector<long long>{1, -1, -3, 1, 1}));
  CHECK(g->constant == 1);
  auto s1 = glynn_orbit_sequence(1, 61);
  g = guess_recurrence(std::span(s1).subspan(4), 6);
  REQUIRE(g);
  CHECK(g->coeffs == to_bigints(std::vector<long long>{1, -1, -1, -1, -1}));
  CHECK(g->constant == -1);
}

TEST_CASE("guessing gives up on short or wild data") {
  CHECK_FALSE(guess_recurrence(fib_terms(5), 3));
  std::vector<BigInt> primes = to_bigints(std::vector<long long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43});
  CHECK_FALSE(guess_recurrence(primes, 3));
}

TEST_CASE("dominant roots") {
  auto g2 = to_bigints(std::vector<long long>{1, 1, -3, -1, 1});    // z^4 − z^3 − 3z^2 + z + 1
  auto g1 = to_bigints(std::vector<long long>{-1, -1, -1, -1, 1});  // z^4 − z^3 − z^2 − z − 1
  CHECK(dominant_root(g2) == doctest::Approx(2.095293985).epsilon(1e-9));
  CHECK(dominant_root(g1) == doctest::Approx(1.927561975).epsilon(1e-9));
  CHECK(dominant_root(to_bigints(std::vector<long long>{-1, -1, 1})) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK_THROWS_AS(dominant_root(to_bigints(std::vector<long long>{1, 1, 1})), NumericError);
}

TEST_CASE("polynomial helpers") {
  auto a = to_bigints(std::vector<long long>{1, -1});
  auto b = to_bigints(std::vector<long long>{1, -1, -1});
  auto p = poly_mul(a, b);
  CHECK(p == to_bigints(std::vector<long long>{1, -2, 0, 1}));
  CHECK(poly_divides(a, p));
  CHECK(poly_divides(b, p));
  CHECK_FALSE(poly_divides(to_bigints(std::vector<long long>{1, 1}), p));
  CHECK(poly_divides(to_bigints(std::vector<long long>{2, -2}), p));
  CHECK(recurrence_to_string(rec({1, -1, -1}, 1, 2)) == "(1)f[n-0] + (-1)f[n-1] + (-1)f[n-2] = 1 for n >= 2");
}
