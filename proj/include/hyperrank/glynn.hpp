#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "hyperrank/bigint.hpp"
#include "hyperrank/diffset.hpp"

namespace hyperrank {

// (a′, a″, a‴, b′, b″, c′, c″) with b′, b″ in [0, 3], the rest bits.
struct TransferVertex2 {
  int a1 = 0, a2 = 0, a3 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
  static constexpr int kCount = 512;
  int index() const;
  static TransferVertex2 from_index(int i);
};

// (a′, a″, b′, b″, b‴, b⁗, c′, c″, c‴, c⁗), all bits.
struct TransferVertex1 {
  int a1 = 0, a2 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  static constexpr int kCount = 1024;
  int index() const;
  static TransferVertex1 from_index(int i);
};

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Digraph whose vertices are split into parts; walks counted are
// part chain[0] -> chain[1] -> ... -> chain.back() = 0, then loops inside part 0, then back to chain[0].
struct TransferGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> out;    // adjacency lists, sorted
  std::vector<std::vector<int>> parts;  // vertex ids per part, sorted
  std::vector<int> chain;               // e.g. {1, 2, 0}: A12 A20, then A00^L, then A01
  int boundary_length = 0;              // walk length outside the loop part

  bool has_edge(int u, int v) const;
  std::size_t edge_count() const;

  template <class Scalar>
  DenseMatrix<Scalar> block(int i, int j) const {
    const auto& rows = parts.at(i);
    const auto& cols = parts.at(j);
    std::vector<int> col_pos(vertex_count, -1);
    for (std::size_t c = 0; c < cols.size(); ++c) col_pos[cols[c]] = static_cast<int>(c);
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int v : out[rows[r]])
        if (col_pos[v] >= 0) m(r, col_pos[v]) = Scalar(1);
    return m;
  }

  // A_{0,chain[0]} A_{chain[0],chain[1]} ... A_{chain[-2],0}: square over part 0.
  template <class Scalar>
  DenseMatrix<Scalar> boundary() const {
    DenseMatrix<Scalar> b = block<Scalar>(0, chain.front());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      DenseMatrix<Scalar> next = b * block<Scalar>(chain[i], chain[i + 1]);
      b = std::move(next);
    }
    return b;
  }
};

const TransferGraph& type2_graph();
const TransferGraph& type1_graph();
TransferGraph build_type2_graph();
TransferGraph build_type1_graph();
// Same graph with vertex v renamed perm[v].
TransferGraph relabel(const TransferGraph& g, const std::vector<int>& perm);

// Number of closed walks of total length boundary_length + loops, via repeated squaring.
template <class Scalar>
Scalar walk_count(const TransferGraph& g, int loops) {
  DenseMatrix<Scalar> acc = g.boundary<Scalar>();
  DenseMatrix<Scalar> base = g.block<Scalar>(0, 0);
  for (int e = loops; e > 0; e >>= 1) {
    if (e & 1) {
      DenseMatrix<Scalar> t = acc * base;
      acc = std::move(t);
    }
    if (e > 1) {
      DenseMatrix<Scalar> sq = base * base;
      base = std::move(sq);
    }
  }
  return acc.trace();
}

// Orbit counts of special solutions for the Glynn exponents.
BigInt glynn2_orbit_count(int d);  // odd d >= 3
BigInt glynn1_orbit_count(int d);  // odd d >= 5
// Values at d = first, first+2, ..., last by stepping the loop part two at a time.
std::vector<BigInt> glynn_orbit_sequence(int type, int last_d);
int glynn_first_degree(int type);

// Direct enumeration of special solutions in the original digit indexing.
std::uint64_t special_solution_bruteforce(FamilyKind family, int d);
int special_position(FamilyKind family, int d);

}  // namespace hyperrank
