#include "doctest.h"
#include "oracles.hpp"
#include "ppsp/arith.hpp"
#include "ppsp/errors.hpp"
#include "ppsp/exact_rational.hpp"

using ppsp::ExactRational;

TEST_CASE("exact rationals stay in lowest terms") {
  ExactRational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(ExactRational(4).str() == "4/1");
  CHECK(ExactRational(1, 3) + ExactRational(1, 6) == ExactRational(1, 2));
  CHECK(ExactRational(2, 3) * ExactRational(3, 4) == ExactRational(1, 2));
  CHECK(ExactRational(1, 2) < ExactRational(2, 3));
  CHECK(ExactRational::parse("-10/4") == ExactRational(-5, 2));
  CHECK(ExactRational::parse("7") == ExactRational(7));
  CHECK_THROWS(ExactRational::parse("1/0"));
  CHECK_THROWS(ExactRational::parse("x"));
  CHECK_THROWS(ExactRational(1, 2).to_int64());
  CHECK(ExactRational(12, 4).to_int64() == 3);
}

TEST_CASE("primality matches trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(ppsp::is_prime(n) == oracle::is_prime_trial(n));
  CHECK(ppsp::is_prime(7919));
  CHECK_FALSE(ppsp::is_prime(1));
  CHECK(ppsp::is_prime(18446744073709551557ULL));
  CHECK_FALSE(ppsp::is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("kronecker symbol matches the quadratic-residue oracle") {
  CHECK(ppsp::kronecker(2, 7) == 1);
  CHECK(ppsp::kronecker(-4, 11) == -1);
  for (std::int64_t a = -60; a <= 60; ++a) {
    CHECK(ppsp::kronecker(a, 1) == 1);
    for (std::int64_t n = -60; n <= 60; ++n) {
      REQUIRE_MESSAGE(ppsp::kronecker(a, n) == oracle::kronecker(a, n), "a=" << a << " n=" << n);
    }
  }
}

TEST_CASE("kronecker symbol is multiplicative in both arguments") {
  for (std::int64_t a = -30; a <= 30; ++a) {
    for (std::int64_t b = -30; b <= 30; ++b) {
      for (std::int64_t n = 1; n <= 40; ++n) {
        REQUIRE(ppsp::kronecker(a * b, n) == ppsp::kronecker(a, n) * ppsp::kronecker(b, n));
        REQUIRE(ppsp::kronecker(n, a * b) == ppsp::kronecker(n, a) * ppsp::kronecker(n, b));
      }
    }
  }
}

TEST_CASE("fundamental discriminants") {
  CHECK(ppsp::fundamental_discriminant(5) == 5);
  CHECK(ppsp::fundamental_discriminant(-7) == -7);
  CHECK(ppsp::fundamental_discriminant(-13) == -52);
  CHECK(ppsp::fundamental_discriminant(2) == 8);
  CHECK(ppsp::fundamental_discriminant(-1) == -4);
  CHECK_THROWS_AS(ppsp::fundamental_discriminant(0), ppsp::PreconditionError);
  CHECK_THROWS_AS(ppsp::fundamental_discriminant(1), ppsp::PreconditionError);
  CHECK_THROWS_AS(ppsp::fundamental_discriminant(12), ppsp::PreconditionError);
  CHECK(ppsp::is_squarefree(-30));
  CHECK_FALSE(ppsp::is_squarefree(18));
}

TEST_CASE("prime inputs and prime powers") {
  auto p = ppsp::PrimeInput::make(13);
  CHECK(p.residue_mod4 == 1);
  CHECK(p.residue_mod8 == 5);
  CHECK(p.one_mod4());
  CHECK_THROWS_AS(ppsp::PrimeInput::make(15), ppsp::PreconditionError);

  auto pp = ppsp::split_prime_power(125);
  CHECK(pp.p == 5);
  CHECK(pp.exponent == 3);
  pp = ppsp::split_prime_power(1ULL << 63);
  CHECK(pp.p == 2);
  CHECK(pp.exponent == 63);
  pp = ppsp::split_prime_power(4294967291ULL * 4294967291ULL);
  CHECK(pp.p == 4294967291ULL);
  CHECK(pp.exponent == 2);
  CHECK_THROWS_AS(ppsp::split_prime_power(1), ppsp::PreconditionError);
  CHECK_THROWS_AS(ppsp::split_prime_power(12), ppsp::PreconditionError);
  CHECK_THROWS_AS(ppsp::split_prime_power(36), ppsp::PreconditionError);
}
