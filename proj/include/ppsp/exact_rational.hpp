#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ppsp {

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator. Every census quantity is carried as one of these; nothing in
/// the library touches floating point.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long long value);  // NOLINT(google-explicit-constructor)
  ExactRational(long long num, long long den);
  ExactRational(const mpz_class& num, const mpz_class& den);
  explicit ExactRational(const mpz_class& value);

  /// Accepts "n", "-n" or "n/d" with d != 0. Throws std::invalid_argument.
  static ExactRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer value; throws std::domain_error when not an integer or not
  /// representable in 64 bits.
  std::int64_t to_int64() const;

  /// Always "num/den", also for integers ("2/1").
  std::string str() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

}  // namespace ppsp
