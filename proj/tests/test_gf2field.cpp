#include <doctest.h>

#include "hyperrank/errors.hpp"
#include "hyperrank/gf2field.hpp"
#include "oracles.hpp"

using namespace hyperrank;

TEST_CASE("modulus is the smallest irreducible of degree d") {
  for (int d = 2; d <= 16; ++d) {
    FieldSpec f = make_field(d);
    std::uint64_t first = 0;
    for (std::uint64_t p = std::uint64_t{1} << d; p < std::uint64_t{1} << (d + 1); ++p)
      if (oracle::irreducible(p)) {
        first = p;
        break;
      }
    CHECK(f.modulus() == first);
  }
}

TEST_CASE("irreducibility agrees with trial division up to degree 14") {
  for (std::uint64_t p = 2; p < (1u << 15); ++p) CHECK_MESSAGE(is_irreducible(p) == oracle::irreducible(p), p);
}

TEST_CASE("generator is the smallest primitive element") {
  for (int d = 2; d <= 14; ++d) {
    FieldSpec f = make_field(d);
    std::uint32_t g = 2;
    while (oracle::order(g, f.modulus(), d) != f.order()) ++g;
    CHECK(f.generator().bits == g);
  }
}

TEST_CASE("larger degrees still give primitive generators") {
  for (int d : {20, 24, 27, 28}) {
    FieldSpec f = make_field(d);
    CHECK(is_irreducible(f.modulus()));
    CHECK(f.element_order(f.generator()) == f.order());
    CHECK(f.pow(f.generator(), f.order()) == f.one());
  }
}

TEST_CASE("multiplication matches shift-and-add on random pairs") {
  auto& g = oracle::rng();
  for (int d = 2; d <= 28; ++d) {
    FieldSpec f = make_field(d);
    for (int t = 0; t < 200; ++t) {
      std::uint32_t a = static_cast<std::uint32_t>(g() & ((std::uint64_t{1} << d) - 1));
      std::uint32_t b = static_cast<std::uint32_t>(g() & ((std::uint64_t{1} << d) - 1));
      REQUIRE(f.mul({a}, {b}).bits == oracle::fmul(a, b, f.modulus(), d));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  auto& g = oracle::rng();
  FieldSpec f = make_field(13);
  for (int t = 0; t < 500; ++t) {
    FieldElem a{static_cast<std::uint32_t>(g() % f.size())}, b{static_cast<std::uint32_t>(g() % f.size())},
        c{static_cast<std::uint32_t>(g() % f.size())};
    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
    CHECK(f.mul(a, b + c) == f.mul(a, b) + f.mul(a, c));
    if (!a.is_zero()) CHECK(f.mul(a, f.inverse(a)) == f.one());
  }
}

TEST_CASE("trace is additive, Frobenius invariant and balanced") {
  for (int d = 2; d <= 12; ++d) {
    FieldSpec f = make_field(d);
    std::uint64_t ones = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      // Tr(x) = x + x^2 + ... + x^{2^{d−1}}
      FieldElem acc{0}, p{x};
      for (int i = 0; i < d; ++i, p = f.square(p)) acc = acc + p;
      REQUIRE(acc.bits <= 1);
      CHECK(f.trace({x}) == static_cast<int>(acc.bits));
      CHECK(f.trace(f.square({x})) == f.trace({x}));
      ones += static_cast<std::uint64_t>(f.trace({x}));
    }
    CHECK(ones == f.size() / 2);
  }
}

TEST_CASE("log table round trip") {
  FieldSpec f = make_field(10);
  LogTable t(f);
  for (std::uint32_t x = 1; x < f.size(); ++x) CHECK(t.exp(t.log({x})).bits == x);
  CHECK(t.exp(0) == f.one());
  CHECK(t.exp(1) == f.generator());
  CHECK_THROWS_AS(t.log(f.zero()), DomainError);
  CHECK_THROWS_AS(LogTable(make_field(25)), CapacityError);
}

TEST_CASE("alternative generators") {
  FieldSpec f = make_field(8);
  FieldSpec h = make_field_with_generator(8, f.pow(f.generator(), 7).bits);
  CHECK(h.modulus() == f.modulus());
  CHECK(h.element_order(h.generator()) == 255);
  CHECK_FALSE(h == f);
  // the cube of a generator of GF(2^8)^* has order 85
  CHECK_THROWS_AS(make_field_with_generator(8, f.pow(f.generator(), 3).bits), DomainError);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(make_field(1), DomainError);
  CHECK_THROWS_AS(make_field(29), DomainError);
  CHECK_THROWS_AS(FieldSpec(4, 0b10101, 2), DomainError);  // (x^2+x+1)^2
  CHECK_THROWS_AS(FieldSpec(4, 0b11111, 2), DomainError);  // irreducible, x has order 5
  CHECK_NOTHROW(FieldSpec(4, 0b10011, 2));
  CHECK_THROWS_AS(make_field(5).inverse({0}), DomainError);
}

TEST_CASE("hex encoding") {
  CHECK(to_hex(0) == "0");
  CHECK(to_hex(0x203) == "203");
  CHECK(to_hex(0xabcdef) == "abcdef");
}
