#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ppsp/errors.hpp"

namespace ppsp {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
using Wide = std::conditional_t<(sizeof(Scalar) <= 8), __int128, Scalar>;

// Fraction-free elimination; every intermediate is a minor of m.
template <typename Scalar>
Wide<Scalar> bareiss_determinant(const IntMatrix<Scalar>& m) {
  using W = Wide<Scalar>;
  const Eigen::Index n = m.rows();
  if (n == 0) return W{1};
  Eigen::Matrix<W, Eigen::Dynamic, Eigen::Dynamic> a = m.template cast<W>();
  W sign = 1;
  W prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return W{0};
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <typename Scalar>
Scalar floor_div(Scalar a, Scalar b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Integral, non-degenerate alternating Gram matrix.
template <typename Scalar = std::int64_t>
class AlternatingForm {
 public:
  using Matrix = IntMatrix<Scalar>;

  explicit AlternatingForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0 || gram_.rows() % 2 != 0) {
      throw PreconditionError("alternating form needs a square matrix of even positive size");
    }
    for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
      if (gram_(i, i) != 0) throw PreconditionError("alternating form has a nonzero diagonal entry");
      for (Eigen::Index j = i + 1; j < gram_.cols(); ++j) {
        if (gram_(i, j) != -gram_(j, i)) throw PreconditionError("gram matrix is not antisymmetric");
      }
    }
    if (detail::bareiss_determinant(gram_) == 0) throw PreconditionError("alternating form is degenerate");
  }

  Eigen::Index dimension() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

 private:
  Matrix gram_;
};

template <typename Scalar = std::int64_t>
struct SymplecticDecomposition {
  IntMatrix<Scalar> transform;
  std::vector<Scalar> factors;
};

/// Block diagonal d_1 J + ... + d_n J with J = [[0, 1], [-1, 0]].
template <typename Scalar>
IntMatrix<Scalar> symplectic_block_form(const std::vector<Scalar>& factors) {
  const Eigen::Index n = static_cast<Eigen::Index>(factors.size());
  IntMatrix<Scalar> out = IntMatrix<Scalar>::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out(2 * k, 2 * k + 1) = factors[static_cast<std::size_t>(k)];
    out(2 * k + 1, 2 * k) = -factors[static_cast<std::size_t>(k)];
  }
  return out;
}

/// Finds unimodular U with U^T A U = symplectic_block_form(factors) and
/// factors forming a divisibility chain.
template <typename Scalar>
SymplecticDecomposition<Scalar> symplectic_normal_form(const AlternatingForm<Scalar>& form) {
  using Matrix = IntMatrix<Scalar>;
  const Eigen::Index dim = form.dimension();
  Matrix m = form.gram();
  Matrix u = Matrix::Identity(dim, dim);

  // Basis changes act on columns of u and congruently on m.
  auto swap_basis = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    m.row(i).swap(m.row(j));
    m.col(i).swap(m.col(j));
    u.col(i).swap(u.col(j));
  };
  // e_target += c * e_source
  auto add_basis = [&](Eigen::Index target, Eigen::Index source, Scalar c) {
    if (c == 0) return;
    m.col(target) += c * m.col(source);
    m.row(target) += c * m.row(source);
    u.col(target) += c * u.col(source);
  };

  SymplecticDecomposition<Scalar> out;
  for (Eigen::Index a = 0; a < dim; a += 2) {
    const Eigen::Index b = a + 1;
    while (true) {
      Eigen::Index bi = -1, bj = -1;
      Scalar best = 0;
      for (Eigen::Index i = a; i < dim; ++i) {
        for (Eigen::Index j = i + 1; j < dim; ++j) {
          Scalar v = m(i, j) < 0 ? -m(i, j) : m(i, j);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (best == 0) throw PreconditionError("alternating form is degenerate");
      swap_basis(a, bi);
      swap_basis(b, bj);
      if (m(a, b) < 0) swap_basis(a, b);
      const Scalar d = m(a, b);

      bool clean = true;
      for (Eigen::Index l = b + 1; l < dim; ++l) {
        add_basis(l, b, -detail::floor_div(m(a, l), d));
        add_basis(l, a, detail::floor_div(m(b, l), d));
        if (m(a, l) != 0 || m(b, l) != 0) clean = false;
      }
      if (!clean) continue;

      Eigen::Index bad = -1;
      for (Eigen::Index i = b + 1; i < dim && bad < 0; ++i) {
        for (Eigen::Index j = i + 1; j < dim; ++j) {
          if (m(i, j) % d != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_basis(a, bad, Scalar{1});
    }
    out.factors.push_back(m(a, b));
  }
  out.transform = u;
  return out;
}

template <typename Scalar>
bool is_modular(const AlternatingForm<Scalar>& form, Scalar a) {
  if (a < 1) throw PreconditionError("modularity needs a positive integer");
  for (Scalar d : symplectic_normal_form(form).factors) {
    if (d != a) return false;
  }
  return true;
}

template <typename Scalar>
bool is_self_dual(const AlternatingForm<Scalar>& form) {
  return is_modular(form, Scalar{1});
}

enum class Parity { Even, Odd };

/// Whether a self-dual hermitian lattice of the given rank exists. The only
/// obstruction is a division algebra, odd rank and even valuation of gamma;
/// the parity is ignored in the split case.
inline bool hermitian_self_dual_exists(bool division_algebra, int rank, Parity ord_gamma_parity) {
  if (rank < 1) throw PreconditionError("rank must be positive, got " + std::to_string(rank));
  return !(division_algebra && rank % 2 == 1 && ord_gamma_parity == Parity::Even);
}

}  // namespace ppsp
