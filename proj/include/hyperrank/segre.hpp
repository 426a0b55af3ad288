#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrank/bigint.hpp"

namespace hyperrank {

enum class Block { B01, B0011, B00111 };

struct BlockString {
  std::vector<Block> blocks;  // leftmost (most significant) first

  int length() const;
  std::string digits() const;  // e.g. "0011" + "01" -> "001101"
  std::string to_string() const;  // blocks joined with '|'
  std::uint64_t value() const;
};

// Block strings whose rotations are exactly the solutions of s(a)+s(5a)=s(6a)+1; odd d >= 3.
std::vector<BlockString> segre_strings(int d);
std::vector<std::uint64_t> segre_solutions(int d);

// Fibonacci numbers with F_0 = F_1 = 1.
BigInt fibonacci(int n);
std::uint64_t fibonacci_mod(std::uint64_t n, std::uint64_t m);

// Number of doubling orbits of Segre-exponent solutions: 2F_{(d−1)/2} − 1 (odd d), F_{d/2} − 1 (even d).
BigInt segre_orbit_count(int d);
std::uint64_t segre_orbit_count_mod(std::uint64_t d, std::uint64_t m);

}  // namespace hyperrank
