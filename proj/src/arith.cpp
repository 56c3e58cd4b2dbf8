#include "ppsp/arith.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "ppsp/errors.hpp"

namespace ppsp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool passes_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// (2/n) for odd n, indexed by n mod 8.
constexpr std::array<int, 8> kTwoTable = {0, 1, 0, -1, 0, -1, 0, 1};

}  // namespace

bool is_prime(std::uint64_t n) {
  // The first twelve primes are a witness set that is exact below 3.3e24.
  constexpr std::array<std::uint64_t, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto w : witnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (auto w : witnesses) {
    if (!passes_witness(n, w, d, r)) return false;
  }
  return true;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;

  int k = 1;
  while ((n & 1) == 0) {
    n /= 2;
    k *= kTwoTable[static_cast<std::size_t>(a & 7)];
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // n is odd and positive from here on; this is the Jacobi symbol loop.
  a %= n;
  if (a < 0) {
    a += n;
  }
  while (a != 0) {
    while ((a & 1) == 0) {
      a /= 2;
      k *= kTwoTable[static_cast<std::size_t>(n & 7)];
    }
    if ((a & 3) == 3 && (n & 3) == 3) k = -k;
    std::int64_t r = n % a;
    n = a;
    a = r;
  }
  return n == 1 ? k : 0;
}

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::uint64_t m = static_cast<std::uint64_t>(d < 0 ? -d : d);
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % (f * f) == 0) return false;
    if (m % f == 0) m /= f;
  }
  return true;
}

std::int64_t fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw PreconditionError("fundamental_discriminant: " + std::to_string(d) +
                            " is not a square-free integer other than 0, 1");
  }
  std::int64_t r = ((d % 4) + 4) % 4;
  return r == 1 ? d : 4 * d;
}

PrimeInput PrimeInput::make(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  return PrimeInput{p, static_cast<int>(p % 4), static_cast<int>(p % 8)};
}

// Largest r with r^k <= q.
static std::uint64_t integer_root(std::uint64_t q, unsigned k) {
  auto pow_le = [q, k](std::uint64_t r) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= r;
      if (acc > q) return false;
    }
    return true;
  };
  std::uint64_t lo = 1;
  std::uint64_t hi = k == 1 ? q : (std::uint64_t{1} << (64 / k + 1));
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (pow_le(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

PrimePower split_prime_power(std::uint64_t q) {
  if (q >= 2) {
    for (unsigned k = 1; k < 64; ++k) {
      std::uint64_t r = integer_root(q, k);
      if (r < 2) break;
      u128 acc = 1;
      for (unsigned i = 0; i < k; ++i) acc *= r;
      if (acc == q && is_prime(r)) return PrimePower{r, k};
    }
  }
  throw PreconditionError(std::to_string(q) + " is not a prime power");
}

}  // namespace ppsp
