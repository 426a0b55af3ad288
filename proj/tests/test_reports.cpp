#include <doctest.h>

#include <map>
#include <numeric>
#include <sstream>

#include "hyperrank/acceptance.hpp"
#include "hyperrank/errors.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/reports.hpp"
#include "hyperrank/seqtools.hpp"
#include "oracles.hpp"

using namespace hyperrank;

namespace {

const char* kTable =
    "d,A6,AglynnI,AglynnII\n"
    "3,1,1,1\n"
    "5,3,1,1\n"
    "7,5,3,5\n"
    "9,9,7,7\n"
    "11,15,13,21\n"
    "13,25,23,37\n"
    "15,41,45,89\n"
    "17,67,87,173\n"
    "19,109,167,383\n"
    "21,177,321,777\n"
    "23,287,619,1665\n"
    "25,465,1193,3441\n";

}  // namespace

TEST_CASE("table reproduction") {
  auto rows = rank_table(25, 15);
  CHECK(rank_table_csv(rows) == kTable);
  for (const auto& r : rows) {
    CHECK(r.digit_checked == (r.d <= 15));
    CHECK(r.singer_rank_complement == static_cast<std::uint64_t>(r.d));
  }
  CHECK_THROWS_AS(rank_table(24), DomainError);
  CHECK_THROWS_AS(rank_table(33), CapacityError);
}

TEST_CASE("rank ordering starts at d = 15 and grows at the dominant-root rates") {
  auto rows = rank_table(31, 0);
  for (const auto& r : rows) {
    bool ordered = r.a_glynn2 > r.a_glynn1 && r.a_glynn1 > r.a6;
    CHECK(ordered == (r.d >= 15));
  }
  double w2 = dominant_root(to_bigints(std::vector<long long>{1, 1, -3, -1, 1}));
  double w1 = dominant_root(to_bigints(std::vector<long long>{-1, -1, -1, -1, 1}));
  const auto& a = rows[rows.size() - 2];
  const auto& b = rows.back();
  CHECK(b.a_glynn2.get_d() / a.a_glynn2.get_d() == doctest::Approx(w2).epsilon(0.02));
  CHECK(b.a_glynn1.get_d() / a.a_glynn1.get_d() == doctest::Approx(w1).epsilon(0.02));
  CHECK(b.a6.get_d() / a.a6.get_d() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(0.01));
}

TEST_CASE("c values") {
  for (int d : {5, 7, 8}) {
    std::uint64_t n = oracle::cyc(d);
    for (std::uint64_t k = 2; k < 14; ++k) {
      if (std::gcd(k, n) != 1 || std::gcd(k - 1, n) != 1) {
        if (k > 2) CHECK_THROWS_AS(c_profile(k, d), DomainError);
        continue;
      }
      std::map<int, std::uint64_t> expect;
      for (std::uint64_t a = 1; a < n; ++a) {
        int c = oracle::s(a, d) + oracle::s((k - 1) * a % n, d) - oracle::s(k * a % n, d);
        CHECK(c_value(k, d, a) == c);
        ++expect[c];
      }
      CHECK(c_profile(k, d).histogram == expect);
    }
  }
}

TEST_CASE("c triples") {
  for (int d = 7; d <= 19; d += 2) {
    auto t = c_triples(d);
    bool has_glynn2 = false;
    for (const auto& x : t) {
      CHECK_MESSAGE(x.distinct(), x.family, " d=", d);
      has_glynn2 = has_glynn2 || x.family == "glynn2";
    }
    CHECK(has_glynn2 == (d >= 11));
  }
  for (const auto& x : c_triples(13))
    if (x.family == "segre") CHECK(x.third == 3);
}

TEST_CASE("gmw parameters") {
  auto six = gmw_parameters(6);
  REQUIRE(six.size() == 1);
  CHECK((six[0].u == 3 && six[0].v == 2 && six[0].r == 3));
  CHECK(gmw_parameters(7).empty());
  for (int d = 4; d <= 16; ++d)
    for (const auto& g : gmw_parameters(d)) {
      CHECK(g.u * g.v == d);
      CHECK(gmw_admissible(g.u, g.v, g.r));
    }
}

TEST_CASE("inequivalence report") {
  for (int d : {7, 9}) {
    auto rep = inequivalence_report(d);
    for (const auto& e : rep.entries)
      if (e.expected) CHECK_MESSAGE(e.complement_rank == *e.expected, e.family, e.params);
    if (d == 7) {
      bool has_qr = false;
      for (const auto& e : rep.entries) has_qr = has_qr || e.family == "qr";
      CHECK(has_qr);
    }
  }
  CHECK_THROWS_AS(inequivalence_report(15), CapacityError);
}

TEST_CASE("Fibonacci congruences") {
  CHECK(pisano_period(2) == 3);
  CHECK(pisano_period(10) == 60);
  CHECK(pisano_period(109) == 108);
  CHECK(pisano_period(251) == 250);
  for (const auto& c : fibonacci_mod_checks()) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("acceptance harness notices a faulty digit sum") {
  AcceptanceOptions opts;
  opts.quick = true;
  CHECK(run_criterion(4, opts).passed());
  opts.digit_counter = [](std::uint64_t k, int d) {
    return count_digit_solutions_with(k, d, [d](std::uint64_t a) { return oracle::s(a, d) + (a == 1 ? 1 : 0); });
  };
  auto r = run_criterion(1, opts);
  CHECK_FALSE(r.passed());
  std::ostringstream os;
  CHECK(print_acceptance({r}, os, false) == 1);
  CHECK(os.str().find("FAIL  criterion 1") != std::string::npos);
}

TEST_CASE("quick acceptance still runs at least 20 checks") {
  AcceptanceOptions opts;
  opts.quick = true;
  std::size_t checks = 0;
  for (int id : {2, 4, 5, 7, 8, 9}) checks += run_criterion(id, opts).checks.size();
  CHECK(checks >= 20);
}
