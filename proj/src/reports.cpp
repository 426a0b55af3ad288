#include "hyperrank/reports.hpp"

#include <algorithm>
#include <sstream>

#include "hyperrank/diffset.hpp"
#include "hyperrank/errors.hpp"
#include "hyperrank/glynn.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/residue.hpp"
#include "hyperrank/segre.hpp"

namespace hyperrank {

std::vector<RankTableRow> rank_table(int d_max, int check_max) {
  if (d_max < 3 || d_max % 2 == 0) throw DomainError("table needs odd d_max >= 3");
  if (d_max > 31) throw CapacityError("table limited to d_max <= 31");
  std::vector<BigInt> g2 = glynn_orbit_sequence(2, d_max);
  std::vector<BigInt> g1 = d_max >= 5 ? glynn_orbit_sequence(1, d_max) : std::vector<BigInt>{};
  std::vector<RankTableRow> rows;
  for (int d = 3; d <= d_max; d += 2) {
    RankTableRow row;
    row.d = d;
    row.a6 = segre_orbit_count(d);
    // The type I walk needs d >= 5; at d = 3 its exponent coincides with the Segre one.
    row.a_glynn1 = d == 3 ? BigInt(count_digit_solutions(family_exponent({FamilyKind::GlynnI}, 3), 3) / 3)
                          : g1[(d - 5) / 2];
    row.a_glynn2 = g2[(d - 3) / 2];
    row.singer_rank_complement = static_cast<std::uint64_t>(d);
    if (d <= check_max) {
      auto check = [&](std::uint64_t k, const BigInt& v, const char* what) {
        std::uint64_t b = count_digit_solutions(k, d);
        if (b % static_cast<std::uint64_t>(d) != 0 || BigInt(big_from_u64(b / d)) != v)
          throw InternalError(std::string(what) + " disagrees with digit counting at d=" + std::to_string(d));
      };
      check(6, row.a6, "segre count");
      check(family_exponent({FamilyKind::GlynnI}, d), row.a_glynn1, "glynn1 count");
      check(family_exponent({FamilyKind::GlynnII}, d), row.a_glynn2, "glynn2 count");
      row.digit_checked = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string rank_table_csv(const std::vector<RankTableRow>& rows) {
  std::ostringstream os;
  os << "d,A6,AglynnI,AglynnII\n";
  for (const auto& r : rows) os << r.d << ',' << r.a6 << ',' << r.a_glynn1 << ',' << r.a_glynn2 << '\n';
  return os.str();
}

int c_value(std::uint64_t k, int d, std::uint64_t a) {
  CyclicModulus m(d);
  std::uint64_t n = m.value();
  return digit_sum(static_cast<std::int64_t>(a % n), m) +
         digit_sum(static_cast<std::int64_t>(mulmod((k - 1) % n, a, n)), m) -
         digit_sum(static_cast<std::int64_t>(mulmod(k % n, a, n)), m);
}

CProfile c_profile(std::uint64_t k, int d) {
  CyclicModulus m(d);
  std::uint64_t n = m.value();
  if (k < 2 || gcd_u64(k % n, n) != 1 || gcd_u64((k - 1) % n, n) != 1)
    throw DomainError("c-profile needs gcd(k(k-1), 2^d-1) = 1");
  CProfile p{k, d, {}};
  std::uint64_t y = (k - 1) % n, z = k % n;
  for (std::uint64_t a = 1; a < n; ++a) {
    ++p.histogram[__builtin_popcountll(a) + __builtin_popcountll(y) - __builtin_popcountll(z)];
    y = (y + (k - 1)) % n;
    z = (z + k) % n;
  }
  return p;
}

std::vector<CTriple> c_triples(int d) {
  if (d < 3 || d % 2 == 0) throw DomainError("c-triples need odd d >= 3");
  CyclicModulus m(d);
  std::uint64_t n = m.value();
  std::uint64_t sigma = std::uint64_t{1} << ((d + 1) / 2);
  struct Spec {
    std::string name;
    std::uint64_t k;
    std::uint64_t third;
  };
  std::vector<Spec> specs = {
      {"regular", 2, 3},
      {"segre", 6, 3},
  };
  // Glynn type I is a distinct family from d = 7, type II from d = 11.
  if (d >= 7) specs.push_back({"glynn1", family_exponent({FamilyKind::GlynnI}, d), sigma + 1});
  if (d >= 11) specs.push_back({"glynn2", family_exponent({FamilyKind::GlynnII}, d), 7});
  // Translation exponents 2^i with gcd(i, d) = 1 and 1 < i < d/2.
  for (int i = 2; 2 * i < d; ++i)
    if (gcd_u64(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(d)) == 1)
      specs.push_back({"translation(" + std::to_string(i) + ")", std::uint64_t{1} << i, (std::uint64_t{1} << i) + 1});
  std::vector<CTriple> out;
  for (const auto& s : specs) {
    CTriple t;
    t.family = s.name;
    t.k = s.k;
    t.third = static_cast<std::int64_t>(s.third);
    t.c1 = c_value(s.k, d, 1);
    t.cm1 = c_value(s.k, d, n - 1);
    t.ct = c_value(s.k, d, s.third % n);
    out.push_back(t);
  }
  return out;
}

std::vector<GmwParams> gmw_parameters(int d) {
  std::vector<GmwParams> out;
  for (int u = 2; u < d; ++u) {
    if (d % u) continue;
    int v = d / u;
    if (v < 2) continue;
    CyclicModulus mu(u);
    for (std::uint64_t r = 2; r + 1 < mu.value(); ++r)
      if (gmw_admissible(u, v, r) && coset_leader(r, mu) == r) out.push_back({u, v, r});
  }
  return out;
}

InequivalenceReport inequivalence_report(int d) {
  if (d < 3 || d % 2 == 0) throw DomainError("inequivalence report needs odd d >= 3");
  if (d > 13) throw CapacityError("inequivalence report limited to d <= 13");
  InequivalenceReport rep;
  rep.d = d;
  FieldSpec spec = make_field(d);
  auto rank_of = [&](const DiffSet& s) { return rank_diffset(s, spec).rank_complement; };
  rep.entries.push_back({"singer", "", rank_of(singer_set(spec)), static_cast<std::uint64_t>(d)});
  for (auto kind : {FamilyKind::Segre, FamilyKind::GlynnI, FamilyKind::GlynnII}) {
    HyperovalFamily fam{kind};
    std::uint64_t k = family_exponent(fam, d);
    rep.entries.push_back(
        {family_name(fam), "k=" + std::to_string(k), rank_of(tau_image(k, spec)), count_digit_solutions(k, d)});
  }
  if (is_prime_u64(spec.order())) rep.entries.push_back({"qr", "", rank_of(qr_set(spec)), std::nullopt});
  for (const auto& g : gmw_parameters(d)) {
    std::uint64_t expect = static_cast<std::uint64_t>(g.u);
    for (int i = 0; i < __builtin_popcountll(g.r); ++i) expect *= static_cast<std::uint64_t>(g.v);
    rep.entries.push_back({"gmw",
                           "u=" + std::to_string(g.u) + ",v=" + std::to_string(g.v) + ",r=" + std::to_string(g.r),
                           rank_of(gmw_set(g.u, g.v, g.r, spec)), expect});
  }
  for (std::size_t i = 0; i < rep.entries.size(); ++i)
    for (std::size_t j = i + 1; j < rep.entries.size(); ++j)
      if (rep.entries[i].complement_rank == rep.entries[j].complement_rank)
        rep.inconclusive.emplace_back(rep.entries[i].family + rep.entries[i].params,
                                      rep.entries[j].family + rep.entries[j].params);
  return rep;
}

std::uint64_t pisano_period(std::uint64_t m) {
  if (m < 2) throw DomainError("pisano period needs m >= 2");
  std::uint64_t a = 0, b = 1 % m;
  for (std::uint64_t i = 1; i <= 6 * m + 2; ++i) {
    std::uint64_t t = (a + b) % m;
    a = b;
    b = t;
    if (a == 0 && b == 1 % m) return i;
  }
  throw InternalError("pisano period not found");
}

std::vector<NamedCheck> fibonacci_mod_checks() {
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail) { out.push_back({std::move(name), ok, std::move(detail)}); };
  std::uint64_t p109 = pisano_period(109), p251 = pisano_period(251);
  add("pisano period mod 109", p109 == 108, std::to_string(p109));
  add("pisano period mod 251", p251 == 250, std::to_string(p251));
  for (std::uint64_t x = 0; x < 3; ++x) {
    std::uint64_t d = 57 + 432 * x;
    std::uint64_t v = segre_orbit_count_mod(d, 109);
    add("A6(" + std::to_string(d) + ") mod 109 = 42", v == 42, std::to_string(v));
  }
  for (std::uint64_t y = 0; y < 2; ++y) {
    std::uint64_t d = 585 + 1000 * y;
    std::uint64_t v = segre_orbit_count_mod(d, 251);
    add("A6(" + std::to_string(d) + ") mod 251 = 235", v == 235, std::to_string(v));
  }
  bool never7 = true, no49 = true;
  std::string where;
  for (int d = 3; d <= 1001; d += 2) {
    BigInt a = segre_orbit_count(d);
    if (a == 7) never7 = false, where += " =7@" + std::to_string(d);
    if (mpz_divisible_ui_p(a.get_mpz_t(), 49)) no49 = false, where += " 49|@" + std::to_string(d);
  }
  add("A6(d) != 7 for odd d <= 1001", never7, where.empty() ? "ok" : where);
  add("49 does not divide A6(d) for odd d <= 1001", no49, where.empty() ? "ok" : where);
  return out;
}

}  // namespace hyperrank
