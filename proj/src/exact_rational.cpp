#include "ppsp/exact_rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ppsp {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("bad integer literal: " + std::string(text));
    }
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

ExactRational::ExactRational(long long value) : value_(mpz_class(static_cast<long>(value))) {
  static_assert(sizeof(long) == sizeof(long long));
}

ExactRational::ExactRational(long long num, long long den)
    : ExactRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& value) : value_(value) {}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text));
  return ExactRational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::int64_t ExactRational::to_int64() const {
  if (!is_integer()) throw std::domain_error("ExactRational: " + str() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("ExactRational: " + str() + " exceeds 64 bits");
  return n.get_si();
}

std::string ExactRational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational out;
  out.value_ = -value_;
  return out;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.str(); }

}  // namespace ppsp
