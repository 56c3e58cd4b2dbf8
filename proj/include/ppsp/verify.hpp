#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppsp/arith.hpp"

namespace ppsp {

/// Deliberate corruption of one input, used to prove the checks can fail.
struct FaultInjection {
  /// Added to h(-p) when evaluating the refined class numbers only.
  std::int64_t refined_h_minus_p_offset = 0;
};

/// Identity names in the order they are checked for each prime.
const std::vector<std::string>& identity_names();

struct IdentityOutcome {
  std::string identity;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

/// Every identity for one prime, in identity_names() order. Exceptions raised
/// while evaluating an identity count as a failure of that identity.
std::vector<IdentityOutcome> verify_prime(const PrimeInput& p, const FaultInjection& fault = {});

struct IdentityTally {
  std::string identity;
  std::int64_t checked = 0;
  std::int64_t passed = 0;
};

struct VerifyFailure {
  std::uint64_t p = 0;
  std::string identity;
  std::string detail;
};

struct VerifySummary {
  std::uint64_t p_max = 0;
  std::int64_t primes_checked = 0;
  std::vector<IdentityTally> tallies;
  /// Smallest failing prime; ties broken by identity order.
  std::optional<VerifyFailure> first_failure;
  std::int64_t failures = 0;

  bool ok() const { return !first_failure.has_value(); }
};

VerifySummary verify_range(std::uint64_t p_max, unsigned jobs, const FaultInjection& fault = {});

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace ppsp
