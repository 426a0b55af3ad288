#include "hyperrank/glynn.hpp"

#include <algorithm>

#include "hyperrank/errors.hpp"
#include "hyperrank/parallel.hpp"
#include "hyperrank/residue.hpp"

namespace hyperrank {

int TransferVertex2::index() const {
  return a1 | a2 << 1 | a3 << 2 | b1 << 3 | b2 << 5 | c1 << 7 | c2 << 8;
}

TransferVertex2 TransferVertex2::from_index(int i) {
  return {i & 1, i >> 1 & 1, i >> 2 & 1, i >> 3 & 3, i >> 5 & 3, i >> 7 & 1, i >> 8 & 1};
}

int TransferVertex1::index() const {
  return a1 | a2 << 1 | b1 << 2 | b2 << 3 | b3 << 4 | b4 << 5 | c1 << 6 | c2 << 7 | c3 << 8 | c4 << 9;
}

TransferVertex1 TransferVertex1::from_index(int i) {
  return {i & 1,      i >> 1 & 1, i >> 2 & 1, i >> 3 & 1, i >> 4 & 1,
          i >> 5 & 1, i >> 6 & 1, i >> 7 & 1, i >> 8 & 1, i >> 9 & 1};
}

bool TransferGraph::has_edge(int u, int v) const {
  const auto& o = out.at(u);
  return std::binary_search(o.begin(), o.end(), v);
}

std::size_t TransferGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& o : out) c += o.size();
  return c;
}

namespace {

bool is_bit(int x) { return x == 0 || x == 1; }

}  // namespace

TransferGraph build_type2_graph() {
  TransferGraph g;
  g.vertex_count = TransferVertex2::kCount;
  g.out.resize(g.vertex_count);
  g.parts.resize(3);
  for (int i = 0; i < g.vertex_count; ++i) {
    auto u = TransferVertex2::from_index(i);
    for (int j = 0; j < g.vertex_count; ++j) {
      auto v = TransferVertex2::from_index(j);
      if (u.a2 != v.a1 || u.a3 != v.a2 || u.b2 != v.b1 || u.c2 != v.c1) continue;
      int y = u.a1 + u.a3 + v.a3 + u.a2 + v.b2 - 2 * u.b1;
      if (!is_bit(y) || !is_bit(y + u.a1 + v.c2 - 2 * u.c1)) continue;
      g.out[i].push_back(j);
    }
    int part = u.c1 == 0 && u.c2 == 0 ? 0 : u.c1 == 0 && u.c2 == 1 ? 1 : u.c1 == 1 && u.c2 == 0 ? 2 : -1;
    if (part >= 0) g.parts[part].push_back(i);
  }
  g.chain = {1, 2, 0};
  g.boundary_length = 3;
  return g;
}

TransferGraph build_type1_graph() {
  TransferGraph g;
  g.vertex_count = TransferVertex1::kCount;
  g.out.resize(g.vertex_count);
  g.parts.resize(5);
  for (int i = 0; i < g.vertex_count; ++i) {
    auto u = TransferVertex1::from_index(i);
    for (int j = 0; j < g.vertex_count; ++j) {
      auto v = TransferVertex1::from_index(j);
      if (u.a2 != v.a1 || u.b2 != v.b1 || u.b3 != v.b2 || u.b4 != v.b3) continue;
      if (u.c2 != v.c1 || u.c3 != v.c2 || u.c4 != v.c3) continue;
      int z = u.a1 + u.a2 + u.b1 - 2 * v.b4;
      if (!is_bit(z) || !is_bit(z + 2 * v.c4 - v.a2 - u.c1)) continue;
      g.out[i].push_back(j);
    }
    int c = u.c1 << 3 | u.c2 << 2 | u.c3 << 1 | u.c4;  // (c′, c″, c‴, c⁗) read as a binary word
    int part = c == 0 ? 0 : c == 1 ? 1 : c == 2 ? 2 : c == 4 ? 3 : c == 8 ? 4 : -1;
    if (part >= 0) g.parts[part].push_back(i);
  }
  g.chain = {1, 2, 3, 4, 0};
  g.boundary_length = 5;
  return g;
}

const TransferGraph& type2_graph() {
  static const TransferGraph g = build_type2_graph();
  return g;
}

const TransferGraph& type1_graph() {
  static const TransferGraph g = build_type1_graph();
  return g;
}

TransferGraph relabel(const TransferGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count) throw DomainError("permutation has the wrong size");
  TransferGraph h = g;
  for (int u = 0; u < g.vertex_count; ++u) {
    auto& o = h.out[perm[u]];
    o.clear();
    for (int v : g.out[u]) o.push_back(perm[v]);
    std::sort(o.begin(), o.end());
  }
  for (std::size_t p = 0; p < g.parts.size(); ++p) {
    for (auto& v : h.parts[p]) v = perm[v];
    std::sort(h.parts[p].begin(), h.parts[p].end());
  }
  return h;
}

namespace {

void require_odd(int d, int lo) {
  if (d < lo || d % 2 == 0) throw DomainError("degree must be odd and at least " + std::to_string(lo));
}

}  // namespace

BigInt glynn2_orbit_count(int d) {
  require_odd(d, 3);
  return walk_count<BigInt>(type2_graph(), d - 3);
}

BigInt glynn1_orbit_count(int d) {
  require_odd(d, 5);
  return walk_count<BigInt>(type1_graph(), d - 5);
}

int glynn_first_degree(int type) {
  if (type == 2) return 3;
  if (type == 1) return 5;
  throw DomainError("glynn type must be 1 or 2");
}

std::vector<BigInt> glynn_orbit_sequence(int type, int last_d) {
  int first = glynn_first_degree(type);
  const TransferGraph& g = type == 2 ? type2_graph() : type1_graph();
  require_odd(last_d, first);
  const auto& v0 = g.parts[0];
  const int m = static_cast<int>(v0.size());
  std::vector<int> local(g.vertex_count, -1);
  for (int i = 0; i < m; ++i) local[v0[i]] = i;
  std::vector<std::vector<int>> pred(m);
  for (int i = 0; i < m; ++i)
    for (int w : g.out[v0[i]])
      if (local[w] >= 0) pred[local[w]].push_back(i);

  DenseMatrix<BigInt> p = g.boundary<BigInt>();
  DenseMatrix<BigInt> next(m, m);
  auto step = [&] {
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        BigInt& s = next(r, c);
        s = 0;
        for (int l : pred[c]) s += p(r, l);
      }
    p.swap(next);
  };
  std::vector<BigInt> out;
  for (int d = first; d <= last_d; d += 2) {
    out.push_back(p.trace());
    if (d + 2 <= last_d) {
      step();
      step();
    }
  }
  return out;
}

int special_position(FamilyKind family, int d) {
  require_odd(d, 3);
  if (family == FamilyKind::GlynnII) return (d - 1) / 2;
  if (family == FamilyKind::GlynnI) return d % 4 == 3 ? (d + 1) / 4 : 3 * ((d - 1) / 4) + 1;
  throw DomainError("special solutions are defined for the Glynn families only");
}

std::uint64_t special_solution_bruteforce(FamilyKind family, int d) {
  int p = special_position(family, d);
  if (d > 25) throw CapacityError("special-solution enumeration limited to d <= 25");
  std::uint64_t k = family_exponent({family}, d);
  std::uint64_t n = (std::uint64_t{1} << d) - 1;
  const std::uint64_t step_y = (k - 1) % n, step_z = k % n;
  const std::uint64_t at_p = std::uint64_t{1} << p;
  const std::uint64_t after_p = std::uint64_t{1} << ((p + 1) % d);
  return parallel_sum(1, n, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t y = mulmod(step_y, lo, n), z = mulmod(step_z, lo, n);
    std::uint64_t hits = 0;
    for (std::uint64_t a = lo; a < hi; ++a) {
      if ((a & y) == at_p && ((a | y) & after_p) == 0 &&
          __builtin_popcountll(a) + __builtin_popcountll(y) == __builtin_popcountll(z) + 1)
        ++hits;
      y += step_y;
      if (y >= n) y -= n;
      z += step_z;
      if (z >= n) z -= n;
    }
    return hits;
  });
}

}  // namespace hyperrank
