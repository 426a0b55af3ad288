#include "hyperrank/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include "hyperrank/circulant.hpp"
#include "hyperrank/cli.hpp"
#include "hyperrank/codes.hpp"
#include "hyperrank/diffset.hpp"
#include "hyperrank/glynn.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/reports.hpp"
#include "hyperrank/residue.hpp"
#include "hyperrank/segre.hpp"
#include "hyperrank/seqtools.hpp"

namespace hyperrank {

bool CriterionResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

// Orbit counts for odd d = 3, 5, ..., 25.
const std::vector<long> kSegreRow = {1, 3, 5, 9, 15, 25, 41, 67, 109, 177, 287, 465};
const std::vector<long> kGlynn1Row = {1, 1, 3, 7, 13, 23, 45, 87, 167, 321, 619, 1193};
const std::vector<long> kGlynn2Row = {1, 1, 5, 7, 21, 37, 89, 173, 383, 777, 1665, 3441};

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    r_.checks.push_back({name, ok, detail});
  }
  // Runs f, turning an exception into a failed check.
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      std::string detail;
      bool ok = f(detail);
      check(name, ok, detail);
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  CriterionResult& r_;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", want " + want;
}

int cap(const AcceptanceOptions& o, int full) { return o.quick ? std::min(full, 15) : full; }

void rank_table_criterion(const AcceptanceOptions& o, Recorder& rec) {
  const int dmax = cap(o, 25);
  auto counter = o.digit_counter ? o.digit_counter : count_digit_solutions;
  rec.guarded("segre column from the Fibonacci closed form", [&](std::string& why) {
    for (int d = 3; d <= dmax; d += 2)
      if (segre_orbit_count(d) != kSegreRow[(d - 3) / 2]) {
        why = mismatch("d=" + std::to_string(d), segre_orbit_count(d).get_str(), std::to_string(kSegreRow[(d - 3) / 2]));
        return false;
      }
    return true;
  });
  rec.guarded("glynn columns from transfer-matrix traces", [&](std::string& why) {
    for (int d = 3; d <= dmax; d += 2) {
      if (glynn2_orbit_count(d) != kGlynn2Row[(d - 3) / 2]) {
        why = "glynn2 d=" + std::to_string(d);
        return false;
      }
      if (d >= 5 && glynn1_orbit_count(d) != kGlynn1Row[(d - 3) / 2]) {
        why = "glynn1 d=" + std::to_string(d);
        return false;
      }
    }
    return true;
  });
  rec.guarded("all three columns from digit counting", [&](std::string& why) {
    for (int d = 3; d <= dmax; d += 2) {
      const std::uint64_t ks[3] = {6, family_exponent({FamilyKind::GlynnI}, d), family_exponent({FamilyKind::GlynnII}, d)};
      const std::vector<long>* rows[3] = {&kSegreRow, &kGlynn1Row, &kGlynn2Row};
      for (int c = 0; c < 3; ++c) {
        std::uint64_t b = counter(ks[c], d);
        std::uint64_t want = static_cast<std::uint64_t>((*rows[c])[(d - 3) / 2]) * static_cast<std::uint64_t>(d);
        if (b != want) {
          why = mismatch("k=" + std::to_string(ks[c]) + " d=" + std::to_string(d), std::to_string(b), std::to_string(want));
          return false;
        }
      }
    }
    return true;
  });
  rec.guarded("rank table report matches the reference rows", [&](std::string& why) {
    auto rows = rank_table(dmax, o.quick ? 15 : 21);
    for (const auto& r : rows) {
      std::size_t i = static_cast<std::size_t>((r.d - 3) / 2);
      if (r.a6 != kSegreRow[i] || r.a_glynn1 != kGlynn1Row[i] || r.a_glynn2 != kGlynn2Row[i]) {
        why = "row d=" + std::to_string(r.d);
        return false;
      }
    }
    return rows.size() == static_cast<std::size_t>((dmax - 1) / 2);
  });
}

void fibonacci_criterion(const AcceptanceOptions& o, Recorder& rec) {
  // Orbit counts from the recurrence A(d) = A(d−2) + A(d−4) + 1 and its initial values.
  std::vector<BigInt> by_rec(42);
  by_rec[2] = 0, by_rec[3] = 1, by_rec[4] = 1, by_rec[5] = 3;
  for (int d = 6; d <= 41; ++d) by_rec[d] = by_rec[d - 2] + by_rec[d - 4] + 1;
  rec.guarded("odd d <= 41: 2F_{(d-1)/2} - 1 equals the recurrence", [&](std::string& why) {
    for (int d = 3; d <= 41; d += 2)
      if (BigInt(2 * fibonacci((d - 1) / 2) - 1) != by_rec[d]) {
        why = "d=" + std::to_string(d);
        return false;
      }
    return true;
  });
  rec.guarded("even d <= 40: B = d(F_{d/2} - 1) equals d times the recurrence", [&](std::string& why) {
    for (int d = 2; d <= 40; d += 2)
      if (BigInt(d * (fibonacci(d / 2) - 1)) != BigInt(d * by_rec[d])) {
        why = "d=" + std::to_string(d);
        return false;
      }
    return true;
  });
  const int dmax = cap(o, 26);
  rec.guarded("digit counting agrees for 2 <= d <= " + std::to_string(dmax), [&](std::string& why) {
    for (int d = 2; d <= dmax; ++d) {
      std::uint64_t b = count_digit_solutions_defined(6, d);
      BigInt want = d * segre_orbit_count(d);
      if (BigInt(big_from_u64(b)) != want) {
        why = mismatch("d=" + std::to_string(d), std::to_string(b), want.get_str());
        return false;
      }
    }
    return true;
  });
  rec.guarded("block-string count equals the closed form, odd d <= 21", [&](std::string& why) {
    for (int d = 3; d <= 21; d += 2)
      if (BigInt(big_from_u64(segre_strings(d).size())) != segre_orbit_count(d)) {
        why = "d=" + std::to_string(d);
        return false;
      }
    return true;
  });
}

void glynn_window_criterion(const AcceptanceOptions& o, Recorder& rec) {
  struct Window {
    int type, last_d, P, Q;
    std::vector<long long> coeffs;
    long long constant;
  };
  const Window windows[2] = {{2, 267, 127, 128, {1, -1, -3, 1, 1}, 1}, {1, 141, 63, 64, {1, -1, -1, -1, -1}, -1}};
  for (const auto& w : windows) {
    int first = glynn_first_degree(w.type);
    std::string tag = "glynn" + std::to_string(w.type);
    Recurrence r{to_bigints(w.coeffs), big_from_i64(w.constant), 4};
    if (o.quick) {
      rec.guarded(tag + " recurrence holds for odd d <= 15", [&](std::string& why) {
        auto seq = glynn_orbit_sequence(w.type, 15);
        for (int n = r.start; n < static_cast<int>(seq.size()); ++n)
          if (!r.holds_at(seq, n)) {
            why = "d=" + std::to_string(first + 2 * n);
            return false;
          }
        return true;
      });
      continue;
    }
    std::vector<BigInt> seq;
    rec.guarded(tag + " recurrence certified on odd d in [" + std::to_string(first + 8) + ", " +
                    std::to_string(w.last_d) + "]",
                [&](std::string& why) {
                  seq = glynn_orbit_sequence(w.type, w.last_d);
                  int bound = certification_bound(r, w.P, w.Q);
                  why = "checked through d=" + std::to_string(first + 2 * bound);
                  return first + 2 * bound == w.last_d && certify_recurrence(seq, r, w.P, w.Q);
                });
    rec.guarded(tag + " stepped sequence equals repeated squaring at d=" + std::to_string(w.last_d),
                [&](std::string& why) {
                  if (seq.empty()) return false;
                  BigInt direct = w.type == 2 ? glynn2_orbit_count(w.last_d) : glynn1_orbit_count(w.last_d);
                  why = "digits=" + std::to_string(direct.get_str().size());
                  return direct == seq.back();
                });
  }
}

void block_string_criterion(const AcceptanceOptions&, Recorder& rec) {
  rec.guarded("nine block strings at d=9", [&](std::string& why) {
    std::set<std::string> want = {"01",        "01|01",      "01|01|01",     "01|01|01|01",  "0011|01",
                                  "0011|01|01", "01|0011|01", "01|01|00111", "0011|00111"};
    std::set<std::string> got;
    for (const auto& s : segre_strings(9)) got.insert(s.to_string());
    why = std::to_string(got.size()) + " strings";
    return got == want;
  });
  rec.guarded("81 solutions at d=9 are the rotations of the nine seeds", [&](std::string& why) {
    std::set<std::uint64_t> want;
    for (std::uint64_t seed : {1, 5, 21, 85, 13, 53, 77, 167, 103})
      for (int i = 0; i < 9; ++i) want.insert(((seed << i) | (seed >> (9 - i))) & 511);
    auto sols = segre_solutions(9);
    std::set<std::uint64_t> got(sols.begin(), sols.end());
    why = std::to_string(got.size()) + " solutions";
    return got == want && sols.size() == 81;
  });
  rec.guarded("every listed solution satisfies the digit equation", [&](std::string& why) {
    CyclicModulus m(9);
    for (auto a : segre_solutions(9)) {
      auto x = static_cast<std::int64_t>(a);
      if (digit_sum(x, m) + digit_sum(5 * x, m) != digit_sum(6 * x, m) + 1) {
        why = "a=" + std::to_string(a);
        return false;
      }
    }
    return true;
  });
}

void code_criterion(const AcceptanceOptions&, Recorder& rec) {
  CyclicCodeInfo info;
  rec.guarded("code at d=9 has length 511 and dimension 82", [&](std::string& why) {
    info = code_info(9);
    why = "n=" + std::to_string(info.n) + " k=" + std::to_string(info.dimension);
    bool divides = Gf2Poly::cyclic_modulus(info.n).mod(info.generator).is_zero();
    return info.n == 511 && info.dimension == 82 && info.nonzero_exponents.size() == 82 && divides;
  });
  rec.guarded("zeros at exponents 1..42 and a nonzero at 43", [&](std::string& why) {
    auto t = bch_run(info);
    why = "run=" + std::to_string(t);
    return t == 42;
  });
  rec.guarded("trace-criterion exponents match the reference cosets", [&](std::string& why) {
    CyclicModulus m(9);
    std::set<std::uint64_t> got, want;
    for (auto e : trace_criterion_exponents(9)) got.insert(coset_leader(e, m));
    for (std::uint64_t e : {1, 5, 7, 9, 19, 25, 37, 77, 117}) want.insert(coset_leader(e, m));
    why = std::to_string(got.size()) + " cosets";
    return got == want && want.size() == 9;
  });
  rec.guarded("sextic criterion equals root counting for all 511 nonzero beta", [&](std::string& why) {
    FieldSpec spec = make_field(9);
    SexticCriterion crit(spec);
    int mismatches = 0;
    for (std::uint32_t b = 1; b < 512; ++b) {
      int roots = sextic_root_count(spec, {b});
      if ((roots != 0 && roots != 2) || crit.solvable({b}) != (roots == 2)) ++mismatches;
    }
    why = std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
  });
}

void rank_triangle_criterion(const AcceptanceOptions& o, Recorder& rec) {
  const int dmax = cap(o, 13);
  for (int d = 3; d <= dmax; d += 2) {
    rec.guarded("three rank oracles agree at d=" + std::to_string(d), [&](std::string& why) {
      FieldSpec spec = make_field(d);
      std::vector<std::uint64_t> ks = {2, 6, family_exponent({FamilyKind::GlynnI}, d),
                                       family_exponent({FamilyKind::GlynnII}, d)};
      for (int i = 2; i < d; ++i)
        if (gcd_u64(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(d)) == 1) ks.push_back(std::uint64_t{1} << i);
      for (auto k : ks) {
        DiffSet s = tau_image(k, spec);
        auto digit = count_digit_solutions(k, d);
        auto g = rank_diffset(s, spec, RankMethod::CirculantGcd);
        auto dense = rank_diffset(s, spec, RankMethod::DenseElimination);
        if (digit != g.rank_complement || digit != dense.rank_complement || g.rank_set != dense.rank_set ||
            g.rank_set != digit + 1) {
          why = "k=" + std::to_string(k) + ": digit " + std::to_string(digit) + ", gcd " +
                std::to_string(g.rank_complement) + ", dense " + std::to_string(dense.rank_complement);
          return false;
        }
      }
      DiffSet singer = singer_set(spec);
      auto g = rank_diffset(singer, spec, RankMethod::CirculantGcd);
      auto dense = rank_diffset(singer, spec, RankMethod::DenseElimination);
      why = std::to_string(ks.size()) + " exponents, singer rank " + std::to_string(g.rank_set);
      return g.rank_set == static_cast<std::uint64_t>(d) + 1 && dense.rank_set == g.rank_set &&
             g.rank_complement == static_cast<std::uint64_t>(d);
    });
  }
}

void circulant_criterion(const AcceptanceOptions& o, Recorder& rec) {
  const int dmax = cap(o, 16);
  for (std::uint64_t k = 3; k <= 9; ++k) {
    rec.guarded("k=" + std::to_string(k) + ": solution count, count-matrix rank, word count, series, d=2.." +
                    std::to_string(dmax),
                [&](std::string& why) {
                  auto series = expand_series(circulant_gf(k), dmax);
                  for (int d = 2; d <= dmax; ++d) {
                    auto r = count_circulant_solutions(k, d);
                    auto m = rank_count_matrix(k, d);
                    auto w = word_count(k, d);
                    if (r != m || r != w || BigInt(big_from_u64(r)) != series[d]) {
                      why = "d=" + std::to_string(d) + ": count " + std::to_string(r) + ", rank " + std::to_string(m) +
                            ", words " + std::to_string(w) + ", series " + series[d].get_str();
                      return false;
                    }
                  }
                  return true;
                });
  }
  rec.guarded("support rank equals count rank for k=5, odd d <= 11", [&](std::string& why) {
    for (int d = 3; d <= 11; d += 2)
      if (rank_support_matrix(5, d) != rank_count_matrix(5, d)) {
        why = "d=" + std::to_string(d);
        return false;
      }
    return true;
  });
  rec.guarded("support rank equals count rank for k in {3, 7, 15}, d <= 12", [&](std::string& why) {
    for (std::uint64_t k : {3, 7, 15})
      for (int d = 2; d <= 12; ++d)
        if (rank_support_matrix(k, d) != rank_count_matrix(k, d)) {
          why = "k=" + std::to_string(k) + " d=" + std::to_string(d);
          return false;
        }
    return true;
  });
}

void inequivalence_criterion(const AcceptanceOptions& o, Recorder& rec) {
  const int dmax = cap(o, 31);
  rec.guarded("strict rank ordering for odd d in [15, " + std::to_string(dmax) + "], growth bounds beyond 25",
              [&](std::string& why) {
                auto rows = rank_table(dmax, 0);
                for (const auto& r : rows) {
                  if (r.d < 15) continue;
                  double g2 = r.a_glynn2.get_d(), g1 = r.a_glynn1.get_d(), s6 = r.a6.get_d();
                  double half = (r.d + 1) / 2.0;
                  bool order = r.a_glynn2 > r.a_glynn1 && r.a_glynn1 > r.a6 && r.a6 > 1;
                  const double third = std::pow(2.0, half) / 3, golden = std::pow(1.6181, half);
                  bool bounds = r.d <= 25 || (g2 > third && third > g1 && g1 > golden && golden > s6);
                  if (!order || !bounds) {
                    why = "d=" + std::to_string(r.d);
                    return false;
                  }
                }
                return true;
              });
  rec.guarded("GMW complement rank u*v^w against direct rank, uv <= 12", [&](std::string& why) {
    int count = 0;
    for (int d = 4; d <= 12; ++d) {
      FieldSpec spec = make_field(d);
      for (const auto& g : gmw_parameters(d)) {
        DiffSet s = gmw_set(g.u, g.v, g.r, spec);
        std::uint64_t want = static_cast<std::uint64_t>(g.u);
        for (int i = 0; i < std::get<GmwTag>(s.provenance).w; ++i) want *= static_cast<std::uint64_t>(g.v);
        auto got = rank_diffset(s, spec).rank_complement;
        ++count;
        if (got != want) {
          why = "u=" + std::to_string(g.u) + " v=" + std::to_string(g.v) + " r=" + std::to_string(g.r) + ": " +
                std::to_string(got) + " vs " + std::to_string(want);
          return false;
        }
      }
    }
    why = std::to_string(count) + " parameter sets";
    return count > 0;
  });
  rec.guarded("QR sets are difference sets (d = 3, 5, 7); Q5 rank equals the Segre rank", [&](std::string& why) {
    for (int d : {3, 5, 7})
      if (!verify_difference_set(qr_set(d))) {
        why = "d=" + std::to_string(d);
        return false;
      }
    auto q = rank_diffset(qr_set(5)).rank_complement;
    auto s = rank_diffset(tau_image(6, 5)).rank_complement;
    why = "ranks " + std::to_string(q) + " and " + std::to_string(s);
    return q == s && q == 15;
  });
  rec.guarded("c-value triples distinct for every family, odd d in [7, " + std::to_string(std::min(dmax, 19)) + "]",
              [&](std::string& why) {
                for (int d = 7; d <= std::min(dmax, 19); d += 2)
                  for (const auto& t : c_triples(d))
                    if (!t.distinct()) {
                      why = t.family + " d=" + std::to_string(d);
                      return false;
                    }
                return true;
              });
  for (const auto& c : fibonacci_mod_checks()) rec.check(c.name, c.passed, c.detail);
}

void property_criterion(const AcceptanceOptions& o, Recorder& rec) {
  const int dmax = cap(o, 13);
  rec.guarded("every constructed family is a difference set, d <= " + std::to_string(dmax), [&](std::string& why) {
    int count = 0;
    auto ok = [&](const DiffSet& s) {
      ++count;
      if (!verify_difference_set(s)) {
        why = provenance_name(s.provenance) + " d=" + std::to_string(s.d);
        return false;
      }
      return true;
    };
    for (int d = 2; d <= dmax; ++d) {
      FieldSpec spec = make_field(d);
      if (!ok(singer_set(spec))) return false;
      if (is_prime_u64(spec.order()) && !ok(qr_set(spec))) return false;
      for (const auto& g : gmw_parameters(d))
        if (!ok(gmw_set(g.u, g.v, g.r, spec))) return false;
      if (d % 2 == 1)
        for (auto kind : {FamilyKind::Segre, FamilyKind::GlynnI, FamilyKind::GlynnII})
          if (!ok(tau_image(family_exponent({kind}, d), spec))) return false;
      for (int i = 2; i < d; ++i)
        if (gcd_u64(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(d)) == 1 &&
            !ok(tau_image(std::uint64_t{1} << i, spec)))
          return false;
    }
    why = std::to_string(count) + " sets";
    return true;
  });
  const int bmax = cap(o, 16);
  rec.guarded("d divides the digit-solution count, k <= 40, d <= " + std::to_string(bmax), [&](std::string& why) {
    int count = 0;
    for (int d = 2; d <= bmax; ++d) {
      std::uint64_t n = (std::uint64_t{1} << d) - 1;
      for (std::uint64_t k = 2; k <= 40; ++k) {
        if (gcd_u64(k % n, n) != 1 || gcd_u64((k - 1) % n, n) != 1) continue;
        ++count;
        if (count_digit_solutions(k, d) % static_cast<std::uint64_t>(d) != 0) {
          why = "k=" + std::to_string(k) + " d=" + std::to_string(d);
          return false;
        }
      }
    }
    why = std::to_string(count) + " (k, d) pairs";
    return true;
  });
  const int smax = cap(o, 14);
  rec.guarded("digit-sum identities exhaustive for d <= " + std::to_string(smax), [&](std::string& why) {
    for (int d = 2; d <= smax; ++d) {
      CyclicModulus m(d);
      const std::uint64_t n = m.value();
      std::vector<std::uint64_t> ks = {3, 4, 5, 6, 7, 8, 9};
      if (d % 2 == 1 && d >= 3) {
        ks.push_back(family_exponent({FamilyKind::GlynnI}, d));
        ks.push_back(family_exponent({FamilyKind::GlynnII}, d));
      }
      for (std::uint64_t a = 1; a < n; ++a) {
        auto x = static_cast<std::int64_t>(a);
        int s = digit_sum(x, m);
        if (digit_sum(static_cast<std::int64_t>(m.rotate(a)), m) != s || s + digit_sum(static_cast<std::int64_t>(n - a), m) != d) {
          why = "rotation/complement d=" + std::to_string(d) + " a=" + std::to_string(a);
          return false;
        }
        std::uint64_t orbit = 0;
        for (int i = 0; i < d; ++i) orbit += m.rotate(a, i);
        if (orbit != n * static_cast<std::uint64_t>(s)) {
          why = "orbit sum d=" + std::to_string(d) + " a=" + std::to_string(a);
          return false;
        }
        for (auto k : ks) {
          if (mulmod(k % n, a, n) == 0 || mulmod((k - 1) % n, a, n) == 0) continue;
          floor_identity(x, static_cast<std::int64_t>(k), m);  // throws on mismatch
        }
      }
    }
    return true;
  });
  rec.guarded("Singer p-rank count equals the binomial formula", [&](std::string& why) {
    struct Case {
      std::uint64_t p;
      int s, dmax;
    };
    for (const Case& c : {Case{2, 1, 10}, Case{2, 2, 4}, Case{3, 1, 5}, Case{5, 1, 3}})
      for (int d = 2; d <= c.dmax; ++d)
        if (BigInt(big_from_u64(singer_rank_count(c.p, c.s, d))) != singer_rank(c.p, c.s, d) - 1) {
          why = "p=" + std::to_string(c.p) + " s=" + std::to_string(c.s) + " d=" + std::to_string(d);
          return false;
        }
    return true;
  });
}

void determinism_criterion(const AcceptanceOptions& o, Recorder& rec) {
  rec.guarded("two table runs are byte-identical", [&](std::string& why) {
    std::vector<std::string> args = {"report", "table1", "--dmax", o.quick ? "15" : "25"};
    std::ostringstream out1, out2, err1, err2;
    int c1 = run_cli(args, out1, err1);
    int c2 = run_cli(args, out2, err2);
    why = std::to_string(out1.str().size()) + " bytes";
    return c1 == 0 && c2 == 0 && !out1.str().empty() && out1.str() == out2.str();
  });
}

const char* kTitles[kCriterionCount] = {
    "rank table reproduction",
    "Fibonacci closed form for the Segre exponent",
    "Glynn recurrence certification windows",
    "block strings and solutions at d=9",
    "cyclic code of the Segre set at d=9",
    "rank-oracle triangle",
    "circulant ranks, word languages and generating functions",
    "rank ordering, GMW, QR, c-values, Fibonacci congruences",
    "property suites",
    "determinism",
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  Recorder rec(r);
  auto t0 = std::chrono::steady_clock::now();
  switch (id) {
    case 1: rank_table_criterion(opts, rec); break;
    case 2: fibonacci_criterion(opts, rec); break;
    case 3: glynn_window_criterion(opts, rec); break;
    case 4: block_string_criterion(opts, rec); break;
    case 5: code_criterion(opts, rec); break;
    case 6: rank_triangle_criterion(opts, rec); break;
    case 7: circulant_criterion(opts, rec); break;
    case 8: inequivalence_criterion(opts, rec); break;
    case 9: property_criterion(opts, rec); break;
    case 10: determinism_criterion(opts, rec); break;
    default: rec.check("unknown criterion", false);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

int print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os, bool verbose) {
  int failed = 0;
  std::size_t checks = 0;
  for (const auto& r : results) {
    checks += r.checks.size();
    failed += !r.passed();
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    os << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " (" << r.checks.size()
       << " checks, " << secs << ")\n";
    for (const auto& c : r.checks)
      if (verbose || !c.passed)
        os << "      " << (c.passed ? "ok  " : "FAIL") << "  " << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
           << "\n";
  }
  os << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed, " << checks
     << " checks\n";
  return failed;
}

}  // namespace hyperrank
