#include "hyperrank/segre.hpp"

#include <algorithm>
#include <array>

#include "hyperrank/errors.hpp"
#include "hyperrank/residue.hpp"

namespace hyperrank {

namespace {

const char* block_text(Block b) {
  switch (b) {
    case Block::B01: return "01";
    case Block::B0011: return "0011";
    case Block::B00111: return "00111";
  }
  return "";
}

int block_length(Block b) { return b == Block::B01 ? 2 : b == Block::B0011 ? 4 : 5; }

void require_odd(int d) {
  if (d < 3 || d % 2 == 0) throw DomainError("block strings need odd d >= 3");
  if (d > 62) throw CapacityError("block strings limited to d <= 62");
}

// All prefixes over {01, 0011} with total length exactly `len`, then `last` appended.
void extend(std::vector<Block>& cur, int len, Block last, std::vector<BlockString>& out) {
  if (len == 0) {
    cur.push_back(last);
    out.push_back({cur});
    cur.pop_back();
    return;
  }
  for (Block b : {Block::B01, Block::B0011}) {
    if (block_length(b) > len) continue;
    cur.push_back(b);
    extend(cur, len - block_length(b), last, out);
    cur.pop_back();
  }
}

}  // namespace

int BlockString::length() const {
  int n = 0;
  for (auto b : blocks) n += block_length(b);
  return n;
}

std::string BlockString::digits() const {
  std::string s;
  for (auto b : blocks) s += block_text(b);
  return s;
}

std::string BlockString::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '|';
    s += block_text(blocks[i]);
  }
  return s;
}

std::uint64_t BlockString::value() const {
  std::uint64_t v = 0;
  for (char c : digits()) v = v << 1 | static_cast<std::uint64_t>(c == '1');
  return v;
}

std::vector<BlockString> segre_strings(int d) {
  require_odd(d);
  std::vector<BlockString> out;
  std::vector<Block> cur;
  for (int len = 2; len < d; ++len) extend(cur, len - 2, Block::B01, out);
  extend(cur, d - 5, Block::B00111, out);
  std::sort(out.begin(), out.end(), [](const BlockString& a, const BlockString& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a.digits() < b.digits();
  });
  return out;
}

std::vector<std::uint64_t> segre_solutions(int d) {
  auto strings = segre_strings(d);
  CyclicModulus m(d);
  std::vector<std::uint64_t> out;
  out.reserve(strings.size() * static_cast<std::size_t>(d));
  for (const auto& s : strings) {
    std::uint64_t v = s.value();
    for (int i = 0; i < d; ++i) out.push_back(m.rotate(v, i));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalError("block-string rotations are not distinct");
  return out;
}

BigInt fibonacci(int n) {
  if (n < 0) throw DomainError("fibonacci index must be nonnegative");
  BigInt f;
  // GMP indexes from F_0 = 0, F_1 = 1; shift by one.
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return f;
}

std::uint64_t fibonacci_mod(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw DomainError("modulus must be positive");
  // Fast doubling on the standard sequence G (G_0 = 0), then F_n = G_{n+1}.
  std::uint64_t a = 0, b = 1 % m;  // G_k, G_{k+1}
  std::uint64_t idx = n + 1;
  for (int bit = 63; bit >= 0; --bit) {
    std::uint64_t c = mulmod(a, (2 * b + m - a) % m, m);
    std::uint64_t e = (mulmod(a, a, m) + mulmod(b, b, m)) % m;
    a = c;
    b = e;
    if (idx >> bit & 1) {
      std::uint64_t t = (a + b) % m;
      a = b;
      b = t;
    }
  }
  return a;
}

BigInt segre_orbit_count(int d) {
  if (d < 2) throw DomainError("degree must be at least 2");
  if (d % 2) return BigInt(2 * fibonacci((d - 1) / 2) - 1);
  return BigInt(fibonacci(d / 2) - 1);
}

std::uint64_t segre_orbit_count_mod(std::uint64_t d, std::uint64_t m) {
  if (d < 2) throw DomainError("degree must be at least 2");
  std::uint64_t v = d % 2 ? (2 * fibonacci_mod((d - 1) / 2, m)) % m : fibonacci_mod(d / 2, m);
  return (v + m - 1 % m) % m;
}

}  // namespace hyperrank
