#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "ppsp/arith.hpp"
#include "ppsp/exact_rational.hpp"

namespace ppsp {

/// A unit of the real quadratic field, stored as (t + u*sqrt p) / (half ? 2 : 1).
/// half is only set when t and u are both odd.
struct QuadraticUnit {
  mpz_class t;
  mpz_class u;
  bool half = false;
  int norm = 1;

  friend bool operator==(const QuadraticUnit& a, const QuadraticUnit& b) {
    return a.t == b.t && a.u == b.u && a.half == b.half && a.norm == b.norm;
  }
};

/// Smallest unit > 1 of the maximal order of Q(sqrt p).
QuadraticUnit fundamental_unit(const PrimeInput& p);

/// Smallest unit > 1 of Z[sqrt p]. Equals fundamental_unit unless p = 1 mod 4
/// and the fundamental unit is half-integral.
QuadraticUnit fundamental_unit_integral(const PrimeInput& p);

/// e^n, renormalized so that half is set only when needed.
QuadraticUnit unit_power(const QuadraticUnit& e, unsigned n, std::uint64_t p);

/// Class number of a negative fundamental discriminant by counting reduced
/// primitive forms.
std::int64_t class_number_by_forms(std::int64_t disc);

/// Class number of a negative fundamental discriminant by the Dirichlet
/// character sum.
std::int64_t class_number_by_dirichlet(std::int64_t disc);

/// h(Q(sqrt d)) for square-free d < 0. Runs both counts above and throws
/// OracleDisagreement if they differ.
std::int64_t class_number_imaginary(std::int64_t d);

/// Number of rho-cycles of primitive reduced indefinite forms of discriminant
/// disc > 0 (nonsquare). This is the narrow class number.
std::int64_t narrow_class_number_cycles(std::int64_t disc);

struct RealClassNumbers {
  std::int64_t h = 0;
  std::int64_t h_plus = 0;
};

RealClassNumbers class_number_real(const PrimeInput& p);

/// [units of O_F : units of Z[sqrt p]], in {1, 3}. Requires p = 1 mod 4.
int unit_index_varpi(const PrimeInput& p);

/// Class number of Z[sqrt p] for p = 1 mod 4.
std::int64_t class_number_order_A(const PrimeInput& p);

ExactRational zeta_siegel(std::int64_t disc);
ExactRational zeta_bernoulli(std::int64_t disc);

/// zeta_F(-1) for F = Q(sqrt p); both sums are evaluated and must agree.
ExactRational zeta_F_minus1(const PrimeInput& p);

/// Second generalized Bernoulli number of the character of Q(sqrt p),
/// equal to 24 * zeta_F(-1).
ExactRational bernoulli_b2_chi(const PrimeInput& p);

struct RealQuadraticProfile {
  PrimeInput p;
  std::int64_t d_F = 0;
  QuadraticUnit unit;
  std::int64_t h = 0;
  std::int64_t h_plus = 0;
  std::optional<int> varpi;
  std::optional<std::int64_t> h_A;
  ExactRational zeta_minus1;

  friend bool operator==(const RealQuadraticProfile&, const RealQuadraticProfile&) = default;
};

/// Assembles the profile and checks its internal consistency
/// (throws InvariantViolation).
RealQuadraticProfile real_quadratic_profile(const PrimeInput& p);

}  // namespace ppsp
