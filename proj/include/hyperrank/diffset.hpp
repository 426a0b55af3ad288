#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hyperrank/gf2field.hpp"

namespace hyperrank {

enum class FamilyKind { Regular, Translation, Segre, GlynnI, GlynnII };

struct HyperovalFamily {
  FamilyKind kind = FamilyKind::Regular;
  int translation_index = 1;  // Translation only: exponent 2^i
};

std::string family_name(const HyperovalFamily& f);
HyperovalFamily parse_family(const std::string& name);

struct HyperovalTau {
  std::uint64_t k;
};
struct SingerTag {};
struct QuadraticResidueTag {};
struct GmwTag {
  int u, v;
  std::uint64_t r;
  int w;
};
struct ExplicitListTag {};
using Provenance = std::variant<HyperovalTau, SingerTag, QuadraticResidueTag, GmwTag, ExplicitListTag>;

std::string provenance_name(const Provenance& p);

struct DiffSetParams {
  std::uint64_t v = 0, k = 0, lambda = 0;
  friend bool operator==(const DiffSetParams&, const DiffSetParams&) = default;
};

// Hadamard parameters (2^d−1, 2^{d−1}−1, 2^{d−2}−1).
DiffSetParams hadamard_params(int d);

struct DiffSet {
  int d = 0;
  std::vector<std::uint32_t> elements;  // sorted bit encodings, all nonzero
  DiffSetParams params;
  Provenance provenance = ExplicitListTag{};
};

std::uint64_t family_exponent(const HyperovalFamily& fam, int d);
bool is_monomial_hyperoval(std::uint64_t k, int d);

// Nonzero values of x + x^k; requires D(x^k) to be a hyperoval.
DiffSet tau_image(std::uint64_t k, int d);
DiffSet tau_image(std::uint64_t k, const FieldSpec& spec);
DiffSet singer_set(int d);
DiffSet singer_set(const FieldSpec& spec);
DiffSet qr_set(int d);
DiffSet qr_set(const FieldSpec& spec);
bool gmw_admissible(int u, int v, std::uint64_t r);
DiffSet gmw_set(int u, int v, std::uint64_t r);
DiffSet gmw_set(int u, int v, std::uint64_t r, const FieldSpec& spec);

// Every nonidentity quotient x/y with x != y in S occurs exactly lambda times.
bool verify_difference_set(const DiffSet& s, int max_degree = 16);
bool verify_difference_set(const DiffSet& s, const FieldSpec& spec, int max_degree = 16);

// {k, 1/k, 1−k, 1/(1−k), k/(k−1), (k−1)/k} mod 2^d−1, sorted and deduplicated.
std::vector<std::uint64_t> exponent_class(std::uint64_t k, int d);
DiffSet apply_multiplier(const DiffSet& s, std::uint64_t t);
DiffSet apply_multiplier(const DiffSet& s, std::uint64_t t, const FieldSpec& spec);
DiffSet complement(const DiffSet& s);

}  // namespace hyperrank
