#include "ppsp/quadratic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppsp/errors.hpp"

namespace ppsp {

namespace {

constexpr long kMaxExpansionSteps = 1000000;

std::int64_t isqrt(std::int64_t n) {
  mpz_class r;
  mpz_class m = static_cast<long>(n);
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r.get_si();
}

// Normalizes (t + u sqrt p)/2 to the integral representation when possible.
QuadraticUnit normalized(mpz_class t, mpz_class u, bool half, int norm) {
  if (half && mpz_even_p(t.get_mpz_t()) && mpz_even_p(u.get_mpz_t())) {
    t /= 2;
    u /= 2;
    half = false;
  }
  return QuadraticUnit{t, u, half, norm};
}

// Walks the continued fraction of (p0 + sqrt n) / q0 and hands each convergent
// h/k to accept(); stops at the first convergent accept() takes.
template <typename Accept>
void expand_until(std::int64_t n, long p0, long q0, Accept accept) {
  mpz_class root;
  mpz_class big_n = static_cast<long>(n);
  mpz_sqrt(root.get_mpz_t(), big_n.get_mpz_t());

  mpz_class P = p0;
  mpz_class Q = q0;
  mpz_class h_prev = 1, h_prev2 = 0;
  mpz_class k_prev = 0, k_prev2 = 1;
  for (long step = 0; step < kMaxExpansionSteps; ++step) {
    mpz_class a;
    mpz_class num = P + root;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    mpz_class h = a * h_prev + h_prev2;
    mpz_class k = a * k_prev + k_prev2;
    if (accept(h, k)) return;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    P = a * Q - P;
    Q = (big_n - P * P) / Q;
  }
  throw std::runtime_error("continued fraction of sqrt " + std::to_string(n) +
                           " did not yield a unit within 10^6 steps");
}

QuadraticUnit unit_from_sqrt(std::int64_t p) {
  QuadraticUnit out;
  mpz_class big_p = static_cast<long>(p);
  expand_until(p, 0, 1, [&](const mpz_class& x, const mpz_class& y) {
    mpz_class n = x * x - big_p * y * y;
    if (n == 1 || n == -1) {
      out = QuadraticUnit{x, y, false, static_cast<int>(n.get_si())};
      return true;
    }
    return false;
  });
  return out;
}

// Convergents x/y of (1 + sqrt p)/2 give candidate units x - y(1 - sqrt p)/2.
QuadraticUnit unit_from_omega(std::int64_t p) {
  QuadraticUnit out;
  mpz_class big_p = static_cast<long>(p);
  expand_until(p, 1, 2, [&](const mpz_class& x, const mpz_class& y) {
    mpz_class t = 2 * x - y;
    mpz_class n = t * t - big_p * y * y;
    if (n == 4 || n == -4) {
      out = normalized(t, y, true, n > 0 ? 1 : -1);
      return true;
    }
    return false;
  });
  return out;
}

bool reduced_imaginary(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (std::llabs(b) > a || a > c) return false;
  if ((std::llabs(b) == a || a == c) && b < 0) return false;
  return true;
}

// sigma_1(n) for n >= 1.
std::int64_t divisor_sum(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      s += f;
      if (f * f != n) s += n / f;
    }
  }
  return s;
}

// |sqrt D - 2|a|| < b < sqrt D, tested with integers only.
bool reduced_indefinite(std::int64_t disc, std::int64_t a, std::int64_t b) {
  if (b <= 0 || b * b >= disc) return false;
  __int128 abs_a = a < 0 ? -a : a;
  __int128 lhs = static_cast<__int128>(disc) + 4 * abs_a * abs_a - static_cast<__int128>(b) * b;
  if (lhs < 0) return true;
  return lhs * lhs < 16 * abs_a * abs_a * disc;
}

struct Form {
  std::int64_t a, b, c;
  auto operator<=>(const Form&) const = default;
};

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

QuadraticUnit fundamental_unit(const PrimeInput& p) {
  if (p.one_mod4()) return unit_from_omega(p.value());
  return unit_from_sqrt(p.value());
}

QuadraticUnit fundamental_unit_integral(const PrimeInput& p) { return unit_from_sqrt(p.value()); }

QuadraticUnit unit_power(const QuadraticUnit& e, unsigned n, std::uint64_t p) {
  mpz_class big_p = static_cast<unsigned long>(p);
  // Work with numerators over the common denominator 2^n when half.
  mpz_class t = 1, u = 0;
  for (unsigned i = 0; i < n; ++i) {
    mpz_class nt = t * e.t + big_p * u * e.u;
    mpz_class nu = t * e.u + u * e.t;
    t = nt;
    u = nu;
  }
  int norm = (n % 2 == 0) ? 1 : e.norm;
  if (!e.half) return QuadraticUnit{t, u, false, norm};
  // Divide by 2^n, keeping one factor of 2 if the result is half-integral.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - 1);
  t /= scale;
  u /= scale;
  return normalized(t, u, true, norm);
}

std::int64_t class_number_by_forms(std::int64_t disc) {
  if (disc >= 0 || floor_mod(disc, 4) > 1) {
    throw PreconditionError("class_number_by_forms: bad discriminant " + std::to_string(disc));
  }
  std::int64_t count = 0;
  std::int64_t n = -disc;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      if (floor_mod(b - disc, 2) != 0) continue;
      std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (!reduced_imaginary(a, b, c)) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::int64_t class_number_by_dirichlet(std::int64_t disc) {
  if (disc >= 0) throw PreconditionError("class_number_by_dirichlet: discriminant must be negative");
  std::int64_t n = -disc;
  mpz_class sum = 0;
  for (std::int64_t a = 1; a <= n; ++a) {
    int chi = kronecker(disc, a);
    if (chi != 0) sum += chi * a;
  }
  long w = disc == -3 ? 6 : (disc == -4 ? 4 : 2);
  mpz_class abs_sum = abs(sum);
  ExactRational h = ExactRational(mpz_class(w) * abs_sum, mpz_class(2 * n));
  if (!h.is_integer()) {
    throw OracleDisagreement("Dirichlet sum for " + std::to_string(disc) + " is not integral: " + h.str());
  }
  return h.to_int64();
}

std::int64_t class_number_imaginary(std::int64_t d) {
  if (d >= 0) throw PreconditionError("class_number_imaginary: d must be negative");
  std::int64_t disc = fundamental_discriminant(d);
  std::int64_t by_forms = class_number_by_forms(disc);
  std::int64_t by_sum = class_number_by_dirichlet(disc);
  if (by_forms != by_sum) {
    throw OracleDisagreement("h(" + std::to_string(d) + "): forms give " + std::to_string(by_forms) +
                             ", Dirichlet sum gives " + std::to_string(by_sum));
  }
  return by_forms;
}

std::int64_t narrow_class_number_cycles(std::int64_t disc) {
  std::int64_t root = disc > 0 ? isqrt(disc) : 0;
  if (disc <= 0 || root * root == disc || floor_mod(disc, 4) > 1) {
    throw PreconditionError("narrow_class_number_cycles: bad discriminant " + std::to_string(disc));
  }
  std::vector<Form> forms;
  for (std::int64_t b = 1; b <= root; ++b) {
    if (floor_mod(b - disc, 2) != 0) continue;
    std::int64_t m = (b * b - disc) / 4;  // = a * c, negative
    for (std::int64_t a = 1; a <= root; ++a) {
      if (m % a != 0) continue;
      for (std::int64_t sa : {a, -a}) {
        std::int64_t c = m / sa;
        if (!reduced_indefinite(disc, sa, b)) continue;
        if (std::gcd(std::gcd(std::llabs(sa), b), std::llabs(c)) != 1) continue;
        forms.push_back(Form{sa, b, c});
      }
    }
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

  auto index_of = [&forms](const Form& f) {
    auto it = std::lower_bound(forms.begin(), forms.end(), f);
    if (it == forms.end() || *it != f) {
      throw std::logic_error("rho left the set of reduced forms");
    }
    return static_cast<std::size_t>(it - forms.begin());
  };
  auto rho = [disc, root](const Form& f) {
    std::int64_t m = 2 * std::llabs(f.c);
    std::int64_t r = root - floor_mod(root + f.b, m);
    return Form{f.c, r, (r * r - disc) / (4 * f.c)};
  };

  std::vector<bool> seen(forms.size(), false);
  std::int64_t cycles = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = index_of(rho(forms[j]));
    }
    if (j != i) throw std::logic_error("rho is not a permutation of reduced forms");
  }
  return cycles;
}

RealClassNumbers class_number_real(const PrimeInput& p) {
  std::int64_t h_plus = narrow_class_number_cycles(fundamental_discriminant(p.value()));
  QuadraticUnit e = fundamental_unit(p);
  if (e.norm == -1) return RealClassNumbers{h_plus, h_plus};
  if (h_plus % 2 != 0) {
    throw OracleDisagreement("odd narrow class number with a unit of norm +1 at p = " + std::to_string(p.p));
  }
  return RealClassNumbers{h_plus / 2, h_plus};
}

int unit_index_varpi(const PrimeInput& p) {
  if (!p.one_mod4()) throw PreconditionError("unit index is only defined for p = 1 mod 4");
  int varpi = fundamental_unit(p).half ? 3 : 1;
  if (p.residue_mod8 == 1 && varpi != 1) {
    throw InvariantViolation("unit-index", "half-integral unit at p = " + std::to_string(p.p) + " = 1 mod 8");
  }
  return varpi;
}

std::int64_t class_number_order_A(const PrimeInput& p) {
  if (!p.one_mod4()) throw PreconditionError("class number of Z[sqrt p] is only used for p = 1 mod 4");
  std::int64_t h = class_number_real(p).h;
  ExactRational value = ExactRational(2 - kronecker(2, p.value())) * ExactRational(h) /
                        ExactRational(unit_index_varpi(p));
  if (!value.is_integer()) {
    throw NonIntegralError("h(A) = " + value.str() + " at p = " + std::to_string(p.p));
  }
  std::int64_t h_a = value.to_int64();
  if (h_a % 2 == 0) throw InvariantViolation("unit-index", "h(A) is even at p = " + std::to_string(p.p));
  return h_a;
}

ExactRational zeta_siegel(std::int64_t disc) {
  std::int64_t total = 0;
  for (std::int64_t b = -isqrt(disc); b * b < disc; ++b) {
    if (floor_mod(b - disc, 2) != 0) continue;
    total += divisor_sum((disc - b * b) / 4);
  }
  return ExactRational(total, 60);
}

ExactRational zeta_bernoulli(std::int64_t disc) {
  mpz_class sum = 0;
  for (std::int64_t a = 1; a <= disc; ++a) {
    int chi = kronecker(disc, a);
    if (chi != 0) sum += mpz_class(static_cast<long>(chi * a)) * static_cast<long>(a);
  }
  return ExactRational(sum, mpz_class(static_cast<long>(24 * disc)));
}

ExactRational zeta_F_minus1(const PrimeInput& p) {
  std::int64_t disc = fundamental_discriminant(p.value());
  ExactRational siegel = zeta_siegel(disc);
  ExactRational bernoulli = zeta_bernoulli(disc);
  if (siegel != bernoulli) {
    throw OracleDisagreement("zeta_F(-1) at p = " + std::to_string(p.p) + ": divisor sum " + siegel.str() +
                             ", character sum " + bernoulli.str());
  }
  return siegel;
}

ExactRational bernoulli_b2_chi(const PrimeInput& p) { return ExactRational(24) * zeta_F_minus1(p); }

RealQuadraticProfile real_quadratic_profile(const PrimeInput& p) {
  RealQuadraticProfile out;
  out.p = p;
  out.d_F = fundamental_discriminant(p.value());
  out.unit = fundamental_unit(p);
  auto [h, h_plus] = class_number_real(p);
  out.h = h;
  out.h_plus = h_plus;
  if (p.one_mod4()) {
    out.varpi = unit_index_varpi(p);
    out.h_A = class_number_order_A(p);
  }
  out.zeta_minus1 = zeta_F_minus1(p);

  const std::string at = " at p = " + std::to_string(p.p);
  if ((out.unit.norm == -1) == p.three_mod4()) {
    throw InvariantViolation("unit-norm", "norm " + std::to_string(out.unit.norm) + at);
  }
  if (out.zeta_minus1.sign() <= 0) throw InvariantViolation("zeta-integrality", "zeta_F(-1) <= 0" + at);
  if (!(ExactRational(60 * out.d_F) * out.zeta_minus1).is_integer()) {
    throw InvariantViolation("zeta-integrality", "60 d_F zeta_F(-1) not integral" + at);
  }
  return out;
}

}  // namespace ppsp
