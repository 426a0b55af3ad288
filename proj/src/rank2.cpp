#include "hyperrank/rank2.hpp"

#include "hyperrank/errors.hpp"
#include "hyperrank/parallel.hpp"
#include "hyperrank/residue.hpp"

namespace hyperrank {

std::string method_name(RankMethod m) {
  switch (m) {
    case RankMethod::DigitCount: return "digit";
    case RankMethod::CirculantGcd: return "gcd";
    case RankMethod::DenseElimination: return "dense";
  }
  return "?";
}

namespace {

void check_units(std::uint64_t k, int d, std::uint64_t n) {
  if (d < 2 || d > FieldSpec::kMaxDegree) throw DomainError("degree out of range");
  if (k < 2) throw DomainError("exponent must be at least 2");
  if (gcd_u64(k % n, n) != 1 || gcd_u64((k - 1) % n, n) != 1)
    throw DomainError("gcd(k(k-1), 2^" + std::to_string(d) + "-1) != 1 for k=" + std::to_string(k));
}

}  // namespace

namespace {

std::uint64_t digit_solution_loop(std::uint64_t k, std::uint64_t n) {
  const std::uint64_t step_y = (k - 1) % n;
  const std::uint64_t step_z = k % n;
  return parallel_sum(1, n, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t y = mulmod(step_y, lo, n);
    std::uint64_t z = mulmod(step_z, lo, n);
    std::uint64_t hits = 0;
    for (std::uint64_t a = lo; a < hi; ++a) {
      hits += y != 0 && z != 0 &&
              __builtin_popcountll(a) + __builtin_popcountll(y) == __builtin_popcountll(z) + 1;
      y += step_y;
      if (y >= n) y -= n;
      z += step_z;
      if (z >= n) z -= n;
    }
    return hits;
  });
}

}  // namespace

std::uint64_t count_digit_solutions(std::uint64_t k, int d) {
  std::uint64_t n = (std::uint64_t{1} << d) - 1;
  check_units(k, d, n);
  return digit_solution_loop(k, n);
}

std::uint64_t count_digit_solutions_defined(std::uint64_t k, int d) {
  if (d < 2 || d > FieldSpec::kMaxDegree) throw DomainError("degree out of range");
  if (k < 2) throw DomainError("exponent must be at least 2");
  return digit_solution_loop(k, (std::uint64_t{1} << d) - 1);
}

std::uint64_t count_digit_solutions_with(std::uint64_t k, int d, const std::function<int(std::uint64_t)>& s) {
  std::uint64_t n = (std::uint64_t{1} << d) - 1;
  check_units(k, d, n);
  std::uint64_t hits = 0;
  for (std::uint64_t a = 1; a < n; ++a)
    hits += s(a) + s(mulmod(k - 1, a, n)) == s(mulmod(k, a, n)) + 1;
  return hits;
}

std::uint64_t circulant_rank(const Gf2Poly& row, std::uint64_t n) {
  if (n == 0) throw DomainError("circulant size must be positive");
  if (row.degree() >= static_cast<std::int64_t>(n)) throw DomainError("row degree must be below n");
  if (row.is_zero()) return 0;
  Gf2Poly g = gcd(Gf2Poly::cyclic_modulus(n), row);
  return n - static_cast<std::uint64_t>(g.degree());
}

std::uint64_t dense_circulant_rank(const Gf2Poly& row, std::uint64_t n) {
  if (n == 0) throw DomainError("circulant size must be positive");
  if (row.degree() >= static_cast<std::int64_t>(n)) throw DomainError("row degree must be below n");
  Gf2Matrix m(n, n);
  auto ones = row.exponents();
  for (std::uint64_t i = 0; i < n; ++i)
    for (auto j : ones) m.set(i, (j + i) % n);
  return m.rank();
}

Gf2Poly characteristic_poly(const DiffSet& s, const FieldSpec& spec) {
  if (s.d != spec.degree()) throw DomainError("difference set and field disagree on d");
  LogTable logs(spec);
  std::vector<std::uint64_t> exps;
  exps.reserve(s.elements.size());
  for (auto x : s.elements) exps.push_back(logs.log({x}));
  return Gf2Poly::from_exponents(exps);
}

RankReport rank_diffset(const DiffSet& s, RankMethod method) { return rank_diffset(s, make_field(s.d), method); }

RankReport rank_diffset(const DiffSet& s, const FieldSpec& spec, RankMethod method) {
  RankReport rep{s.d, provenance_name(s.provenance), 0, 0, method};
  std::uint64_t n = spec.order();
  if (method == RankMethod::DigitCount) {
    auto* tau = std::get_if<HyperovalTau>(&s.provenance);
    if (!tau) throw DomainError("digit-count rank applies to hyperoval sets only");
    rep.rank_complement = count_digit_solutions(tau->k, s.d);
    rep.rank_set = rep.rank_complement + 1;
    return rep;
  }
  int cap = method == RankMethod::CirculantGcd ? 20 : 14;
  if (s.d > cap) throw CapacityError(method_name(method) + " rank limited to d <= " + std::to_string(cap));
  Gf2Poly row = characteristic_poly(s, spec);
  Gf2Poly comp = Gf2Poly::all_ones(n) + row;
  auto rank = method == RankMethod::CirculantGcd ? circulant_rank : dense_circulant_rank;
  rep.rank_set = rank(row, n);
  rep.rank_complement = rank(comp, n);
  return rep;
}

BigInt singer_rank(std::uint64_t p, int s, int d) {
  if (p < 2 || s < 1 || d < 2) throw DomainError("singer rank needs p >= 2, s >= 1, d >= 2");
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), p + d - 2, static_cast<unsigned long>(d - 1));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s));
  return r + 1;
}

std::uint64_t singer_rank_count(std::uint64_t p, int s, int d) {
  if (!is_prime_u64(p) || s < 1 || d < 2) throw DomainError("singer count needs prime p, s >= 1, d >= 2");
  std::uint64_t q = 1, total = 1;
  for (int i = 0; i < s; ++i) q *= p;
  for (int i = 0; i < d; ++i) {
    if (total > (std::uint64_t{1} << 30) / q) throw CapacityError("singer count limited to q^d <= 2^30");
    total *= q;
  }
  std::uint64_t modulus = total - 1;
  std::uint64_t target = (p - 1) * static_cast<std::uint64_t>(s);
  std::uint64_t hits = 0;
  for (std::uint64_t x = q - 1; x < modulus; x += q - 1)
    hits += static_cast<std::uint64_t>(base_p_digit_sum(x, p, modulus)) == target;
  return hits;
}

}  // namespace hyperrank
