#include "hyperrank/diffset.hpp"

#include <algorithm>

#include "hyperrank/errors.hpp"
#include "hyperrank/residue.hpp"

namespace hyperrank {

namespace {

std::uint64_t cyclic_order(int d) { return (std::uint64_t{1} << d) - 1; }

std::vector<std::uint32_t> collect(const std::vector<bool>& member) {
  std::vector<std::uint32_t> out;
  for (std::size_t x = 1; x < member.size(); ++x)
    if (member[x]) out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

void require_odd(int d, const char* what) {
  if (d < 3 || d % 2 == 0) throw DomainError(std::string(what) + " needs odd d >= 3");
}

}  // namespace

std::string family_name(const HyperovalFamily& f) {
  switch (f.kind) {
    case FamilyKind::Regular: return "regular";
    case FamilyKind::Translation: return "translation";
    case FamilyKind::Segre: return "segre";
    case FamilyKind::GlynnI: return "glynn1";
    case FamilyKind::GlynnII: return "glynn2";
  }
  return "?";
}

HyperovalFamily parse_family(const std::string& name) {
  if (name == "regular") return {FamilyKind::Regular};
  if (name == "translation") return {FamilyKind::Translation};
  if (name == "segre") return {FamilyKind::Segre};
  if (name == "glynn1") return {FamilyKind::GlynnI};
  if (name == "glynn2") return {FamilyKind::GlynnII};
  throw InputError("unknown hyperoval family '" + name + "'");
}

std::string provenance_name(const Provenance& p) {
  struct V {
    std::string operator()(const HyperovalTau& t) const { return "hyperoval(k=" + std::to_string(t.k) + ")"; }
    std::string operator()(const SingerTag&) const { return "singer"; }
    std::string operator()(const QuadraticResidueTag&) const { return "qr"; }
    std::string operator()(const GmwTag& g) const {
      return "gmw(u=" + std::to_string(g.u) + ",v=" + std::to_string(g.v) + ",r=" + std::to_string(g.r) + ")";
    }
    std::string operator()(const ExplicitListTag&) const { return "explicit"; }
  };
  return std::visit(V{}, p);
}

DiffSetParams hadamard_params(int d) {
  return {cyclic_order(d), (std::uint64_t{1} << (d - 1)) - 1, (std::uint64_t{1} << (d - 2)) - 1};
}

std::uint64_t family_exponent(const HyperovalFamily& fam, int d) {
  if (d < 2 || d > FieldSpec::kMaxDegree) throw DomainError("degree out of range");
  switch (fam.kind) {
    case FamilyKind::Regular: return 2;
    case FamilyKind::Translation: {
      int i = fam.translation_index;
      if (i < 1 || i >= d || gcd_u64(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(d)) != 1)
        throw DomainError("translation exponent 2^i needs 1 <= i < d with gcd(i, d) = 1");
      return std::uint64_t{1} << i;
    }
    case FamilyKind::Segre: require_odd(d, "segre"); return 6;
    case FamilyKind::GlynnI: {
      require_odd(d, "glynn1");
      std::uint64_t sigma = std::uint64_t{1} << ((d + 1) / 2);
      std::uint64_t gamma = d % 4 == 1 ? std::uint64_t{1} << ((3 * d + 1) / 4)
                                       : std::uint64_t{1} << ((d + 1) / 4);
      return sigma + gamma;
    }
    case FamilyKind::GlynnII: {
      require_odd(d, "glynn2");
      return 3 * (std::uint64_t{1} << ((d + 1) / 2)) + 4;
    }
  }
  throw DomainError("unknown family");
}

bool is_monomial_hyperoval(std::uint64_t k, int d) {
  if (k < 2 || d < 2) return false;
  if (d > 24) throw CapacityError("hyperoval test limited to d <= 24");
  FieldSpec spec = make_field(d);
  std::uint64_t n = spec.order();
  if (gcd_u64(k % n, n) != 1) return false;
  std::vector<std::uint8_t> hits(spec.size(), 0);
  hits[0] = 1;  // τ(0) = 0
  FieldElem x = spec.one();
  FieldElem y = spec.one();
  FieldElem gk = spec.pow(spec.generator(), k);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto& h = hits[(x + y).bits];
    if (++h > 2) return false;
    x = spec.mul(x, spec.generator());
    y = spec.mul(y, gk);
  }
  for (auto h : hits)
    if (h != 0 && h != 2) return false;
  return true;
}

DiffSet tau_image(std::uint64_t k, int d) { return tau_image(k, make_field(d)); }

DiffSet tau_image(std::uint64_t k, const FieldSpec& spec) {
  int d = spec.degree();
  if (!is_monomial_hyperoval(k, d))
    throw DomainError("x^" + std::to_string(k) + " does not give a hyperoval at d=" + std::to_string(d));
  std::vector<bool> member(spec.size(), false);
  FieldElem x = spec.one(), y = spec.one();
  FieldElem gk = spec.pow(spec.generator(), k);
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    member[(x + y).bits] = true;
    x = spec.mul(x, spec.generator());
    y = spec.mul(y, gk);
  }
  DiffSet s{d, collect(member), hadamard_params(d), HyperovalTau{k}};
  if (s.elements.size() != s.params.k) throw InternalError("tau image has the wrong size");
  return s;
}

DiffSet singer_set(int d) { return singer_set(make_field(d)); }

DiffSet singer_set(const FieldSpec& spec) {
  DiffSet s{spec.degree(), {}, hadamard_params(spec.degree()), SingerTag{}};
  for (std::uint64_t x = 1; x < spec.size(); ++x)
    if (spec.trace({static_cast<std::uint32_t>(x)}) == 0) s.elements.push_back(static_cast<std::uint32_t>(x));
  return s;
}

DiffSet qr_set(int d) { return qr_set(make_field(d)); }

DiffSet qr_set(const FieldSpec& spec) {
  std::uint64_t n = spec.order();
  if (!is_prime_u64(n)) throw DomainError("quadratic-residue set needs 2^d-1 prime");
  if (spec.degree() > 24) throw CapacityError("quadratic-residue set limited to d <= 24");
  std::vector<bool> member(spec.size(), false);
  FieldElem x = spec.generator();
  for (std::uint64_t e = 1; e < n; ++e) {
    if (powmod(e, (n - 1) / 2, n) == 1) member[x.bits] = true;
    x = spec.mul(x, spec.generator());
  }
  return {spec.degree(), collect(member), hadamard_params(spec.degree()), QuadraticResidueTag{}};
}

bool gmw_admissible(int u, int v, std::uint64_t r) {
  if (u < 2 || v < 2 || u * v > FieldSpec::kMaxDegree) return false;
  std::uint64_t m = (std::uint64_t{1} << u) - 1;
  if (r <= 1 || r >= m || gcd_u64(r, m) != 1) return false;
  for (int i = 0; i < u; ++i)
    if ((std::uint64_t{1} << i) % m == r) return false;
  return true;
}

DiffSet gmw_set(int u, int v, std::uint64_t r) {
  if (u < 2 || v < 2 || u * v > FieldSpec::kMaxDegree) throw DomainError("gmw needs u, v > 1 and uv <= 28");
  return gmw_set(u, v, r, make_field(u * v));
}

DiffSet gmw_set(int u, int v, std::uint64_t r, const FieldSpec& spec) {
  if (!gmw_admissible(u, v, r) || spec.degree() != u * v)
    throw DomainError("inadmissible gmw parameters (u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                      ", r=" + std::to_string(r) + ")");
  int d = u * v;
  DiffSet s{d, {}, hadamard_params(d), GmwTag{u, v, r, __builtin_popcountll(r)}};
  for (std::uint64_t e = 1; e < spec.size(); ++e) {
    FieldElem y{static_cast<std::uint32_t>(e)};
    // Relative trace down to GF(2^u): Σ_{i<v} y^{q^i}, q = 2^u.
    FieldElem t = y, acc = y;
    for (int i = 1; i < v; ++i) {
      for (int j = 0; j < u; ++j) t = spec.square(t);
      acc = acc + t;
    }
    FieldElem p = spec.pow(acc, r);
    FieldElem tr = p, z = p;
    for (int j = 1; j < u; ++j) {
      z = spec.square(z);
      tr = tr + z;
    }
    if (tr.bits > 1) throw InternalError("subfield trace left GF(2)");
    if (tr.bits == 0) s.elements.push_back(y.bits);
  }
  return s;
}

bool verify_difference_set(const DiffSet& s, int max_degree) {
  return verify_difference_set(s, make_field(s.d), max_degree);
}

bool verify_difference_set(const DiffSet& s, const FieldSpec& spec, int max_degree) {
  if (s.d != spec.degree()) throw DomainError("difference set and field disagree on d");
  if (s.d > max_degree)
    throw CapacityError("difference-set verification limited to d <= " + std::to_string(max_degree));
  std::uint64_t n = spec.order();
  if (s.params.v != n || s.elements.size() != s.params.k) return false;
  LogTable logs(spec);
  std::vector<std::uint32_t> e;
  e.reserve(s.elements.size());
  for (auto x : s.elements) {
    if (x == 0 || !spec.contains({x})) return false;
    e.push_back(logs.log({x}));
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
  std::vector<std::uint32_t> count(n, 0);
  for (auto a : e)
    for (auto b : e)
      if (a != b) ++count[a >= b ? a - b : a + n - b];
  for (std::uint64_t g = 1; g < n; ++g)
    if (count[g] != s.params.lambda) return false;
  return true;
}

std::vector<std::uint64_t> exponent_class(std::uint64_t k, int d) {
  CyclicModulus m(d);
  std::uint64_t n = m.value();
  std::uint64_t kk = k % n;
  std::uint64_t km1 = (kk + n - 1) % n;
  std::uint64_t one_minus_k = (n + 1 - kk) % n;
  if (gcd_u64(kk, n) != 1 || gcd_u64(km1, n) != 1)
    throw DomainError("exponent class needs k and k-1 invertible mod 2^d-1");
  std::uint64_t inv_k = invmod(kk, n);
  std::uint64_t inv_km1 = invmod(km1, n);
  std::vector<std::uint64_t> out{kk,
                                 inv_k,
                                 one_minus_k,
                                 invmod(one_minus_k, n),
                                 mulmod(kk, inv_km1, n),
                                 mulmod(km1, inv_k, n)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiffSet apply_multiplier(const DiffSet& s, std::uint64_t t) { return apply_multiplier(s, t, make_field(s.d)); }

DiffSet apply_multiplier(const DiffSet& s, std::uint64_t t, const FieldSpec& spec) {
  if (gcd_u64(t % spec.order(), spec.order()) != 1) throw DomainError("multiplier must be invertible mod 2^d-1");
  DiffSet out = s;
  out.provenance = ExplicitListTag{};
  for (auto& x : out.elements) x = spec.pow({x}, t).bits;
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

DiffSet complement(const DiffSet& s) {
  std::uint64_t size = std::uint64_t{1} << s.d;
  std::vector<bool> member(size, true);
  for (auto x : s.elements) member[x] = false;
  DiffSet out{s.d, collect(member), {}, ExplicitListTag{}};
  out.params.v = s.params.v;
  out.params.k = s.params.v - s.params.k;
  out.params.lambda = s.params.v - 2 * s.params.k + s.params.lambda;
  return out;
}

}  // namespace hyperrank
