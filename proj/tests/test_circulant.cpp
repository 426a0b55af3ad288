#include <doctest.h>

#include "hyperrank/circulant.hpp"
#include "hyperrank/errors.hpp"
#include "hyperrank/gf2field.hpp"
#include "oracles.hpp"

using namespace hyperrank;

namespace {

// s(a) + s((k−1)a) = s*(ka), with (k−1)a ≡ 0 counted as a solution.
std::set<std::uint64_t> oracle_solutions(std::uint64_t k, int d) {
  std::uint64_t n = oracle::cyc(d);
  std::set<std::uint64_t> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    std::uint64_t y = (k - 1) % n * a % n;
    if (y == 0 || oracle::s(a, d) + oracle::s(y, d) == oracle::s_star(k % n * a, d)) out.insert(a);
  }
  return out;
}

}  // namespace

TEST_CASE("solution counts match the oracle") {
  for (std::uint64_t k = 3; k <= 20; ++k)
    for (int d = 2; d <= 11; ++d) REQUIRE_MESSAGE(count_circulant_solutions(k, d) == oracle_solutions(k, d).size(), k, " ", d);
  CHECK(count_circulant_solutions(3, 2) == 2);
  CHECK_THROWS_AS(count_circulant_solutions(2, 5), DomainError);
}

TEST_CASE("preimage rows match direct evaluation") {
  for (std::uint64_t k : {3, 5, 8}) {
    for (int d = 2; d <= 8; ++d) {
      FieldSpec f = make_field(d);
      CountRow row = preimage_row(k, d);
      auto log = oracle::logs(f.generator().bits, f.modulus(), d);
      std::vector<std::uint32_t> counts(f.order(), 0);
      std::uint64_t zeros = 0;
      for (std::uint32_t x = 1; x < f.size(); ++x) {
        std::uint32_t v = oracle::fpow(x, k, f.modulus(), d) ^ oracle::fpow(x, k - 1, f.modulus(), d);
        if (v == 0)
          ++zeros;
        else
          ++counts[log[v]];
      }
      CHECK(row.counts == counts);
      CHECK(row.zeros == zeros);
    }
  }
}

TEST_CASE("count-matrix rank equals the solution count for every k") {
  for (std::uint64_t k = 3; k <= 20; ++k)
    for (int d = 2; d <= 10; ++d) {
      auto r = count_circulant_solutions(k, d);
      REQUIRE_MESSAGE(rank_count_matrix(k, d) == r, k, " ", d);
      auto row = preimage_row(k, d);
      bool all_even = std::all_of(row.counts.begin(), row.counts.end(), [](auto c) { return c % 2 == 0; });
      CHECK((r == 0) == all_even);
    }
}

TEST_CASE("gcd and dense ranks agree") {
  for (std::uint64_t k : {3, 5, 6, 7, 11})
    for (int d = 2; d <= 10; ++d) {
      CHECK(rank_count_matrix(k, d) == rank_count_matrix_dense(k, d));
      CHECK(rank_support_matrix(k, d) == rank_support_matrix_dense(k, d));
    }
  CHECK_THROWS_AS(rank_count_matrix_dense(3, 15), CapacityError);
  CHECK_THROWS_AS(rank_count_matrix(3, 17), CapacityError);
}

TEST_CASE("root counts for k = 2^m − 1 are zero or odd") {
  for (std::uint64_t k : {3, 7, 15})
    for (int d = 2; d <= 12; ++d) {
      auto prof = root_profile(k, d);
      std::uint64_t cs = 0, roots = 0;
      for (const auto& [r, c] : prof) {
        CHECK((r == 0 || r % 2 == 1));
        cs += c;
        roots += r * c;
      }
      CHECK(cs == oracle::cyc(d));
      CHECK(roots == oracle::cyc(d) - preimage_row(k, d).zeros);
    }
}

TEST_CASE("word languages describe the solutions") {
  for (std::uint64_t k = 3; k <= 9; ++k)
    for (int d = 2; d <= 14; ++d) {
      auto words = word_solutions(k, d);
      auto sols = oracle_solutions(k, d);
      REQUIRE_MESSAGE(std::vector<std::uint64_t>(sols.begin(), sols.end()) == words, k, " ", d);
      CHECK(word_count(k, d) == words.size());
    }
  CHECK(word_count(3, 2) == 2);
  CHECK(word_language(6).components == std::vector<std::vector<std::string>>{{"01", "0011"}});
  CHECK_THROWS_AS(word_language(10), DomainError);
  CHECK_THROWS_AS(word_solutions(5, 21), CapacityError);
}

TEST_CASE("generating functions match counts") {
  for (std::uint64_t k = 3; k <= 9; ++k) {
    auto series = expand_series(circulant_gf(k), 20);
    CHECK(series[0] == 0);
    CHECK(series[1] == 0);
    for (int d = 2; d <= 20; ++d) {
      CHECK(series[d] == big_from_u64(count_circulant_solutions(k, d)));
      CHECK(series[d] == big_from_u64(word_count(k, d)));
    }
  }
}
