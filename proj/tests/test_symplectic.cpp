#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ppsp/errors.hpp"
#include "ppsp/symplectic.hpp"

using Form = ppsp::AlternatingForm<std::int64_t>;
using Mat = ppsp::IntMatrix<std::int64_t>;

namespace {

oracle::Matrix to_rows(const Mat& m) {
  oracle::Matrix out(static_cast<std::size_t>(m.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return out;
}

Mat random_alternating(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  while (true) {
    Mat m = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        m(i, j) = entry(rng);
        m(j, i) = -m(i, j);
      }
    }
    if (oracle::pfaffian(to_rows(m)) != 0) return m;
  }
}

Mat random_unimodular(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<Eigen::Index> index(0, n - 1);
  std::uniform_int_distribution<std::int64_t> coef(-2, 2);
  Mat v = Mat::Identity(n, n);
  for (int step = 0; step < 6; ++step) {
    Eigen::Index i = index(rng), j = index(rng);
    if (i == j) continue;
    v.col(i) += coef(rng) * v.col(j);
  }
  return v;
}

void check_decomposition(const Mat& a) {
  Form form(a);
  auto dec = ppsp::symplectic_normal_form(form);
  const Mat& u = dec.transform;
  REQUIRE(Mat(u.transpose() * a * u) == ppsp::symplectic_block_form(dec.factors));

  __int128 det = oracle::determinant(to_rows(u));
  REQUIRE((det == 1 || det == -1));

  REQUIRE(dec.factors.front() == oracle::gcd_of_entries(to_rows(a)));
  __int128 product = 1;
  for (std::size_t k = 0; k < dec.factors.size(); ++k) {
    REQUIRE(dec.factors[k] > 0);
    if (k > 0) REQUIRE(dec.factors[k] % dec.factors[k - 1] == 0);
    product *= dec.factors[k];
  }
  __int128 pf = oracle::pfaffian(to_rows(a));
  REQUIRE(product == (pf < 0 ? -pf : pf));
}

}  // namespace

TEST_CASE("alternating form validation") {
  Mat j(2, 2);
  j << 0, 1, -1, 0;
  CHECK_NOTHROW(Form{j});
  Mat odd = Mat::Zero(3, 3);
  CHECK_THROWS_AS(Form{odd}, ppsp::PreconditionError);
  Mat sym(2, 2);
  sym << 0, 1, 1, 0;
  CHECK_THROWS_AS(Form{sym}, ppsp::PreconditionError);
  Mat diag(2, 2);
  diag << 1, 1, -1, 0;
  CHECK_THROWS_AS(Form{diag}, ppsp::PreconditionError);
  Mat degenerate(4, 4);
  degenerate << 0, 1, 2, 3, -1, 0, 4, 5, -2, -4, 0, -2, -3, -5, 2, 0;  // Pfaffian -2 - 10 + 12 = 0
  CHECK_THROWS_AS(Form{degenerate}, ppsp::PreconditionError);
}

TEST_CASE("normal form examples") {
  Mat j = ppsp::symplectic_block_form<std::int64_t>({1});
  auto dj = ppsp::symplectic_normal_form(Form(j));
  CHECK(dj.factors == std::vector<std::int64_t>{1});
  CHECK(dj.transform == Mat::Identity(2, 2));

  auto d2 = ppsp::symplectic_normal_form(Form(Mat(2 * j)));
  CHECK(d2.factors == std::vector<std::int64_t>{2});

  // Off-diagonal pairing 6 and 4 has invariant factors 2 and 12.
  Mat m = ppsp::symplectic_block_form<std::int64_t>({6, 4});
  auto dm = ppsp::symplectic_normal_form(Form(m));
  CHECK(dm.factors == std::vector<std::int64_t>{2, 12});
  check_decomposition(m);
}

TEST_CASE("self-duality and modularity") {
  CHECK(ppsp::is_self_dual(Form(ppsp::symplectic_block_form<std::int64_t>({1}))));
  CHECK_FALSE(ppsp::is_self_dual(Form(ppsp::symplectic_block_form<std::int64_t>({2}))));
  CHECK_FALSE(ppsp::is_self_dual(Form(ppsp::symplectic_block_form<std::int64_t>({1, 3}))));
  CHECK(ppsp::is_modular(Form(ppsp::symplectic_block_form<std::int64_t>({2, 2})), std::int64_t{2}));
  CHECK_FALSE(ppsp::is_modular(Form(ppsp::symplectic_block_form<std::int64_t>({1})), std::int64_t{2}));
  CHECK_FALSE(ppsp::is_modular(Form(ppsp::symplectic_block_form<std::int64_t>({2, 6})), std::int64_t{2}));
  CHECK_THROWS_AS(ppsp::is_modular(Form(ppsp::symplectic_block_form<std::int64_t>({1})), std::int64_t{0}),
                  ppsp::PreconditionError);
}

TEST_CASE("random forms decompose exactly") {
  std::mt19937_64 rng(20260419);
  for (int i = 0; i < 250; ++i) check_decomposition(random_alternating(rng, 4));
  for (int i = 0; i < 250; ++i) check_decomposition(random_alternating(rng, 6));
}

TEST_CASE("invariant factors do not depend on the basis") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Eigen::Index n = i % 2 == 0 ? 4 : 6;
    Mat a = random_alternating(rng, n);
    Mat v = random_unimodular(rng, n);
    Mat b = v.transpose() * a * v;
    CHECK(ppsp::symplectic_normal_form(Form(a)).factors == ppsp::symplectic_normal_form(Form(b)).factors);
  }
}

TEST_CASE("hermitian self-dual existence") {
  using ppsp::Parity;
  CHECK_FALSE(ppsp::hermitian_self_dual_exists(true, 3, Parity::Even));
  CHECK(ppsp::hermitian_self_dual_exists(true, 2, Parity::Even));
  CHECK(ppsp::hermitian_self_dual_exists(false, 3, Parity::Even));
  for (bool division : {false, true}) {
    for (int rank : {2, 3}) {
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        bool expected = !(division && rank % 2 == 1 && parity == Parity::Even);
        CHECK(ppsp::hermitian_self_dual_exists(division, rank, parity) == expected);
      }
    }
  }
}
