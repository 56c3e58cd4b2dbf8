#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "ppsp/arith.hpp"
#include "ppsp/errors.hpp"
#include "ppsp/quadratic.hpp"

using ppsp::ExactRational;
using ppsp::PrimeInput;

namespace {

std::vector<std::uint64_t> primes_below(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < n; ++p) {
    if (oracle::is_prime_trial(p)) out.push_back(p);
  }
  return out;
}

// sum_{a=1}^{d} chi(a) a^2 / (24 d), with chi from the residue oracle.
ExactRational zeta_oracle(std::int64_t d) {
  std::int64_t s = 0;
  for (std::int64_t a = 1; a <= d; ++a) s += oracle::kronecker(d, a) * a * a;
  return ExactRational(s, 24 * d);
}

}  // namespace

TEST_CASE("imaginary class numbers") {
  CHECK(ppsp::class_number_imaginary(-7) == 1);
  CHECK(ppsp::class_number_imaginary(-13) == 2);
  CHECK(ppsp::class_number_imaginary(-39) == 4);
  CHECK(ppsp::class_number_imaginary(-3) == 1);
  CHECK(ppsp::class_number_imaginary(-1) == 1);
  CHECK(ppsp::class_number_imaginary(-23) == 3);
  CHECK(ppsp::class_number_imaginary(-47) == 5);
  CHECK(ppsp::class_number_imaginary(-163) == 1);
  CHECK_THROWS_AS(ppsp::class_number_imaginary(-12), ppsp::PreconditionError);
  CHECK_THROWS_AS(ppsp::class_number_imaginary(5), ppsp::PreconditionError);

  for (std::int64_t d = -1; d > -500; --d) {
    if (!ppsp::is_squarefree(d)) continue;
    std::int64_t disc = ppsp::fundamental_discriminant(d);
    REQUIRE_MESSAGE(ppsp::class_number_imaginary(d) == oracle::count_reduced_forms(disc), "d=" << d);
  }
}

TEST_CASE("fundamental units") {
  auto e5 = ppsp::fundamental_unit(PrimeInput::make(5));
  CHECK(e5.t == 1);
  CHECK(e5.u == 1);
  CHECK(e5.half);
  CHECK(e5.norm == -1);

  auto e3 = ppsp::fundamental_unit(PrimeInput::make(3));
  CHECK(e3.t == 2);
  CHECK(e3.u == 1);
  CHECK_FALSE(e3.half);
  CHECK(e3.norm == 1);

  auto e13 = ppsp::fundamental_unit(PrimeInput::make(13));
  CHECK(e13.t == 3);
  CHECK(e13.u == 1);
  CHECK(e13.half);
  CHECK(e13.norm == -1);

  auto e151 = ppsp::fundamental_unit(PrimeInput::make(151));
  CHECK(e151.t == mpz_class("1728148040"));
  CHECK(e151.u == mpz_class("140634693"));
}

TEST_CASE("fundamental units are minimal solutions of the norm equation") {
  constexpr std::int64_t kCap = 5'000'000;
  for (std::uint64_t p : primes_below(200)) {
    auto in = PrimeInput::make(p);
    auto e = ppsp::fundamental_unit(in);
    bool mod4 = in.one_mod4();
    std::int64_t n = mod4 ? 4 : 1;
    mpz_class t = e.t, u = e.u;
    if (mod4 && !e.half) {
      t *= 2;
      u *= 2;
    }
    auto sol = oracle::smallest_pell(in.value(), n, std::min<std::int64_t>(kCap, u.get_si()));
    if (sol) {
      CHECK_MESSAGE(t == sol->t, "p=" << p);
      CHECK_MESSAGE(u == sol->u, "p=" << p);
    } else {
      CHECK_MESSAGE(u > kCap, "p=" << p);
    }
  }
}

TEST_CASE("units satisfy the norm equation and the index relation") {
  for (std::uint64_t p : primes_below(2000)) {
    auto in = PrimeInput::make(p);
    auto e = ppsp::fundamental_unit(in);
    mpz_class lhs = e.t * e.t - mpz_class(static_cast<unsigned long>(p)) * e.u * e.u;
    REQUIRE_MESSAGE(lhs == e.norm * (e.half ? 4 : 1), "p=" << p);
    if (in.three_mod4()) REQUIRE(e.norm == 1);
    if (in.one_mod4()) {
      int varpi = ppsp::unit_index_varpi(in);
      REQUIRE(varpi == (e.half ? 3 : 1));
      if (in.residue_mod8 == 1) REQUIRE(varpi == 1);
      REQUIRE(ppsp::unit_power(e, static_cast<unsigned>(varpi), p) == ppsp::fundamental_unit_integral(in));
    }
  }
}

TEST_CASE("real class numbers") {
  auto c5 = ppsp::class_number_real(PrimeInput::make(5));
  CHECK(c5.h == 1);
  CHECK(c5.h_plus == 1);
  auto c7 = ppsp::class_number_real(PrimeInput::make(7));
  CHECK(c7.h == 1);
  CHECK(c7.h_plus == 2);
  auto c13 = ppsp::class_number_real(PrimeInput::make(13));
  CHECK(c13.h == 1);
  CHECK(c13.h_plus == 1);

  // Primes below 260 whose real quadratic field has class number 3; all
  // others have class number 1.
  const std::vector<std::uint64_t> three{79, 223, 229, 257};
  for (std::uint64_t p : primes_below(260)) {
    auto in = PrimeInput::make(p);
    auto c = ppsp::class_number_real(in);
    std::int64_t expected = std::count(three.begin(), three.end(), p) ? 3 : 1;
    CHECK_MESSAGE(c.h == expected, "p=" << p);
    CHECK(c.h_plus == (in.three_mod4() ? 2 : 1) * c.h);
  }
}

TEST_CASE("unit index and class number of the suborder") {
  CHECK(ppsp::unit_index_varpi(PrimeInput::make(5)) == 3);
  CHECK(ppsp::unit_index_varpi(PrimeInput::make(17)) == 1);
  CHECK(ppsp::unit_index_varpi(PrimeInput::make(13)) == 3);
  CHECK(ppsp::class_number_order_A(PrimeInput::make(5)) == 1);
  CHECK(ppsp::class_number_order_A(PrimeInput::make(13)) == 1);
  CHECK(ppsp::class_number_order_A(PrimeInput::make(17)) == 1);
  CHECK_THROWS_AS(ppsp::unit_index_varpi(PrimeInput::make(7)), ppsp::PreconditionError);
  CHECK_THROWS_AS(ppsp::class_number_order_A(PrimeInput::make(3)), ppsp::PreconditionError);
  for (std::uint64_t p : primes_below(2000)) {
    auto in = PrimeInput::make(p);
    if (!in.one_mod4()) continue;
    REQUIRE(ppsp::class_number_order_A(in) % 2 == 1);
  }
}

TEST_CASE("zeta at -1") {
  CHECK(ppsp::zeta_F_minus1(PrimeInput::make(5)) == ExactRational(1, 30));
  CHECK(ppsp::zeta_F_minus1(PrimeInput::make(13)) == ExactRational(1, 6));
  CHECK(ppsp::zeta_F_minus1(PrimeInput::make(7)) == ExactRational(2, 3));
  CHECK(ppsp::zeta_F_minus1(PrimeInput::make(2)) == ExactRational(1, 12));

  for (std::uint64_t p : primes_below(700)) {
    auto in = PrimeInput::make(p);
    std::int64_t d = ppsp::fundamental_discriminant(in.value());
    ExactRational z = ppsp::zeta_F_minus1(in);
    REQUIRE(ppsp::zeta_siegel(d) == ppsp::zeta_bernoulli(d));
    REQUIRE_MESSAGE(z == zeta_oracle(d), "p=" << p);
    REQUIRE((z * ExactRational(60 * d)).is_integer());
    REQUIRE(ppsp::bernoulli_b2_chi(in) == z * ExactRational(24));
  }
}

TEST_CASE("profile is consistent") {
  auto prof = ppsp::real_quadratic_profile(PrimeInput::make(13));
  CHECK(prof.d_F == 13);
  CHECK(prof.varpi == 3);
  CHECK(prof.h_A == 1);
  CHECK(prof.zeta_minus1 == ExactRational(1, 6));
  auto prof7 = ppsp::real_quadratic_profile(PrimeInput::make(7));
  CHECK(prof7.d_F == 28);
  CHECK_FALSE(prof7.varpi.has_value());
  CHECK_FALSE(prof7.h_A.has_value());
}
