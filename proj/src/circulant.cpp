#include "hyperrank/circulant.hpp"

#include <algorithm>
#include <functional>

#include "hyperrank/errors.hpp"
#include "hyperrank/gf2field.hpp"
#include "hyperrank/rank2.hpp"
#include "hyperrank/residue.hpp"

namespace hyperrank {

namespace {

void require_k(std::uint64_t k) {
  if (k < 3) throw DomainError("exponent must be at least 3");
}

void require_cap(int d, int cap, const char* what) {
  if (d < 2) throw DomainError("degree must be at least 2");
  if (d > cap) throw CapacityError(std::string(what) + " limited to d <= " + std::to_string(cap));
}

// Histogram of f(x) = x^k + x^{k−1} over x ≠ 0, indexed by field-element bits.
std::vector<std::uint32_t> value_counts(std::uint64_t k, const FieldSpec& spec) {
  std::vector<std::uint32_t> hits(spec.size(), 0);
  FieldElem x = spec.one();
  FieldElem xk1 = spec.one();
  FieldElem gk1 = spec.pow(spec.generator(), k - 1);
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    ++hits[spec.mul(xk1, x + spec.one()).bits];
    x = spec.mul(x, spec.generator());
    xk1 = spec.mul(xk1, gk1);
  }
  return hits;
}

Gf2Poly row_poly(const CountRow& row, bool support) {
  Gf2Poly p;
  for (std::size_t j = 0; j < row.counts.size(); ++j)
    if (support ? row.counts[j] != 0 : (row.counts[j] & 1) != 0) p.set(j);
  return p;
}

}  // namespace

CountRow preimage_row(std::uint64_t k, int d) {
  require_k(k);
  require_cap(d, 20, "count rows");
  FieldSpec spec = make_field(d);
  LogTable logs(spec);
  auto hits = value_counts(k, spec);
  CountRow row{k, d, std::vector<std::uint32_t>(spec.order(), 0), hits[0]};
  for (std::uint64_t v = 1; v < spec.size(); ++v)
    row.counts[logs.log({static_cast<std::uint32_t>(v)})] = hits[v];
  return row;
}

std::uint64_t count_circulant_solutions(std::uint64_t k, int d) {
  require_k(k);
  require_cap(d, FieldSpec::kMaxDegree, "solution counts");
  CyclicModulus m(d);
  const std::uint64_t n = m.value();
  const std::uint64_t step_y = (k - 1) % n, step_z = k % n;
  std::uint64_t y = step_y, z = step_z, hits = 0;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (y == 0) {
      ++hits;
    } else {
      int rhs = z == 0 ? d : __builtin_popcountll(z);
      hits += __builtin_popcountll(a) + __builtin_popcountll(y) == rhs;
    }
    y += step_y;
    if (y >= n) y -= n;
    z += step_z;
    if (z >= n) z -= n;
  }
  return hits;
}

std::uint64_t rank_count_matrix(std::uint64_t k, int d) {
  require_cap(d, 16, "count-matrix rank");
  return circulant_rank(row_poly(preimage_row(k, d), false), (std::uint64_t{1} << d) - 1);
}

std::uint64_t rank_support_matrix(std::uint64_t k, int d) {
  require_cap(d, 16, "support-matrix rank");
  return circulant_rank(row_poly(preimage_row(k, d), true), (std::uint64_t{1} << d) - 1);
}

std::uint64_t rank_count_matrix_dense(std::uint64_t k, int d) {
  require_cap(d, 14, "dense count-matrix rank");
  return dense_circulant_rank(row_poly(preimage_row(k, d), false), (std::uint64_t{1} << d) - 1);
}

std::uint64_t rank_support_matrix_dense(std::uint64_t k, int d) {
  require_cap(d, 14, "dense support-matrix rank");
  return dense_circulant_rank(row_poly(preimage_row(k, d), true), (std::uint64_t{1} << d) - 1);
}

std::map<std::uint32_t, std::uint64_t> root_profile(std::uint64_t k, int d) {
  require_k(k);
  require_cap(d, 16, "root profiles");
  FieldSpec spec = make_field(d);
  auto hits = value_counts(k, spec);
  std::map<std::uint32_t, std::uint64_t> profile;
  for (std::uint64_t c = 1; c < spec.size(); ++c) ++profile[hits[c]];
  return profile;
}

WordLanguage word_language(std::uint64_t k) {
  switch (k) {
    case 3: return {{{"0", "01"}}, {}, true};
    case 4: return {{{"01"}}, {}, false};
    case 5: return {{{"0", "001", "0011"}}, {}, true};
    case 6: return {{{"01", "0011"}}, {}, false};
    case 7: return {{{"0", "001"}, {"01", "011"}}, {}, true};
    // Only the periodic words: mixing 001 and 011 breaks the equation.
    case 8: return {{{"001"}, {"011"}}, {}, false};
    // (01)^m: ka vanishes for even d, so s* = d.
    case 9: return {{{"0", "00011", "000111"}, {"01"}}, {0}, true};
    default: throw DomainError("word languages are known for k in 3..9 only");
  }
}

namespace {

std::vector<std::string> component_blocks(const WordLanguage& lang, std::size_t c, int max_len) {
  std::vector<std::string> blocks;
  for (const auto& b : lang.components[c])
    if (static_cast<int>(b.size()) <= max_len) blocks.push_back(b);
  if (std::find(lang.periodic_components.begin(), lang.periodic_components.end(), static_cast<int>(c)) !=
      lang.periodic_components.end())
    for (std::string b = "0001"; static_cast<int>(b.size()) <= max_len; b += "01") blocks.push_back(b);
  return blocks;
}

bool has_zero_block(const std::vector<std::string>& blocks) {
  return std::find(blocks.begin(), blocks.end(), "0") != blocks.end();
}

}  // namespace

std::uint64_t word_count(std::uint64_t k, int d) {
  WordLanguage lang = word_language(k);
  if (d < 2) throw DomainError("degree must be at least 2");
  if (d > 62) throw CapacityError("word counts limited to d <= 62");
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < lang.components.size(); ++c) {
    auto blocks = component_blocks(lang, c, d);
    // linear[m]: words of length m over the blocks.
    std::vector<std::uint64_t> linear(d + 1, 0);
    linear[0] = 1;
    for (int m = 1; m <= d; ++m)
      for (const auto& b : blocks)
        if (static_cast<int>(b.size()) <= m) linear[m] += linear[m - b.size()];
    // The block covering the rightmost digit, with its covering offset, then a linear word.
    for (const auto& b : blocks) total += b.size() * linear[d - b.size()];
    if (lang.exclude_all_zero && has_zero_block(blocks)) total -= 1;
  }
  return total;
}

std::vector<std::uint64_t> word_solutions(std::uint64_t k, int d) {
  WordLanguage lang = word_language(k);
  if (d < 2) throw DomainError("degree must be at least 2");
  if (d > 20) throw CapacityError("word enumeration limited to d <= 20");
  std::vector<std::uint64_t> out;
  const std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  for (std::size_t c = 0; c < lang.components.size(); ++c) {
    auto blocks = component_blocks(lang, c, d);
    std::function<void(std::string&)> grow = [&](std::string& s) {
      if (static_cast<int>(s.size()) == d) {
        std::uint64_t v = 0;
        for (char ch : s) v = v << 1 | static_cast<std::uint64_t>(ch == '1');
        out.push_back(v);
        return;
      }
      for (const auto& b : blocks) {
        if (s.size() + b.size() > static_cast<std::size_t>(d)) continue;
        s += b;
        grow(s);
        s.resize(s.size() - b.size());
      }
    };
    for (const auto& first : blocks) {
      for (std::size_t offset = 0; offset < first.size(); ++offset) {
        std::size_t before = out.size();
        std::string s = first;
        grow(s);
        // The digit at string index `offset` has weight 2^down; rotate it into the rightmost place.
        const int down = d - 1 - static_cast<int>(offset);
        for (std::size_t i = before; i < out.size(); ++i) {
          std::uint64_t v = out[i];
          out[i] = ((v >> down) | (v << (d - down))) & mask;
        }
      }
    }
    if (lang.exclude_all_zero && has_zero_block(blocks)) std::erase(out, std::uint64_t{0});
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalError("block language has an ambiguous cyclic parse");
  return out;
}

RationalSeries circulant_gf(std::uint64_t k) {
  auto P = [](std::initializer_list<long long> c) { return to_bigints(std::vector<long long>(c)); };
  auto mul = [](std::vector<BigInt> a, const std::vector<BigInt>& b) { return poly_mul(a, b); };
  const auto one_minus_z = P({1, -1});
  const auto fib = P({1, -1, -1});
  switch (k) {
    case 3: return {P({0, 0, 2, -1}), mul(one_minus_z, fib)};
    case 4: return {P({0, 0, 2}), P({1, 0, -1})};
    case 5: return {P({0, 0, 0, 3, 2, -3}), mul(mul(one_minus_z, P({1, 0, 1})), fib)};
    case 6: return {P({0, 0, 2, 0, 4}), P({1, 0, -1, 0, -1})};
    case 7:
      return {P({0, 0, 2, 2, -6, -2, -2, 5}), mul(mul(one_minus_z, P({1, -1, 0, -1})), P({1, 0, -1, -1}))};
    case 8: return {P({0, 0, 0, 6}), P({1, 0, 0, -1})};
    case 9:
      return {P({0, 0, 2, -4, 6, 2, 2, -12, -2, 7}), mul(mul(one_minus_z, fib), P({1, 0, 0, 1, 0, 0, -1}))};
    default: throw DomainError("closed-form generating functions are known for k in 3..9 only");
  }
}

}  // namespace hyperrank
