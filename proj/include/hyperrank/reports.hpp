#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperrank/bigint.hpp"

namespace hyperrank {

struct RankTableRow {
  int d = 0;
  BigInt a6, a_glynn1, a_glynn2;
  std::uint64_t singer_rank_complement = 0;
  bool digit_checked = false;  // values re-derived by digit counting
};

// Odd d = 3..d_max (<= 31); d <= check_max also cross-checked by digit counting.
std::vector<RankTableRow> rank_table(int d_max, int check_max = 21);
std::string rank_table_csv(const std::vector<RankTableRow>& rows);

// c(a) = s(a) + s((k−1)a) − s(ka).
int c_value(std::uint64_t k, int d, std::uint64_t a);
struct CProfile {
  std::uint64_t k = 0;
  int d = 0;
  std::map<int, std::uint64_t> histogram;
  std::size_t distinct() const { return histogram.size(); }
};
CProfile c_profile(std::uint64_t k, int d);

// Residues whose c-values separate a family from the Singer set: (1, −1, t).
struct CTriple {
  std::string family;
  std::uint64_t k = 0;
  std::int64_t third = 0;
  int c1 = 0, cm1 = 0, ct = 0;
  bool distinct() const { return c1 != cm1 && c1 != ct && cm1 != ct; }
};
std::vector<CTriple> c_triples(int d);

struct GmwParams {
  int u = 0, v = 0;
  std::uint64_t r = 0;
};
// Admissible (u, v, r) with uv = d, one r per doubling coset mod 2^u − 1.
std::vector<GmwParams> gmw_parameters(int d);

struct FamilyRank {
  std::string family;
  std::string params;
  std::uint64_t complement_rank = 0;
  std::optional<std::uint64_t> expected;
};
struct InequivalenceReport {
  int d = 0;
  std::vector<FamilyRank> entries;
  std::vector<std::pair<std::string, std::string>> inconclusive;  // equal ranks
};
InequivalenceReport inequivalence_report(int d);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
std::uint64_t pisano_period(std::uint64_t m);
std::vector<NamedCheck> fibonacci_mod_checks();

}  // namespace hyperrank
