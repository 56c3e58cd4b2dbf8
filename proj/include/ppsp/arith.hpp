#pragma once

#include <cstdint>

namespace ppsp {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Kronecker symbol (a/n), extended to n <= 0 and even n in the usual way:
/// (a/0) = 1 iff a = +-1, (a/-1) = sign of a, (a/2) read off a mod 8.
int kronecker(std::int64_t a, std::int64_t n);

bool is_squarefree(std::int64_t d);

/// Discriminant of Q(sqrt d): d when d = 1 mod 4, else 4d.
/// Throws PreconditionError unless d is square-free and d is not 0 or 1.
std::int64_t fundamental_discriminant(std::int64_t d);

/// A prime together with the residues the census case analysis keys on.
struct PrimeInput {
  std::uint64_t p = 0;
  int residue_mod4 = 0;
  int residue_mod8 = 0;

  /// Throws PreconditionError if p is not prime.
  static PrimeInput make(std::uint64_t p);

  std::int64_t value() const { return static_cast<std::int64_t>(p); }
  bool one_mod4() const { return residue_mod4 == 1; }
  bool three_mod4() const { return residue_mod4 == 3; }

  friend bool operator==(const PrimeInput&, const PrimeInput&) = default;
};

/// Factorization q = p^exponent of a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned exponent = 0;
};

/// Throws PreconditionError unless q > 1 is a prime power.
PrimePower split_prime_power(std::uint64_t q);

}  // namespace ppsp
