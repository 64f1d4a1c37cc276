// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/freepoly.hpp"
#include "ncreal/mattuple.hpp"
#include "ncreal/random.hpp"

using namespace ncreal;
using namespace ncreal::testing;

TEST_CASE("words are ordered graded-lexicographically")
{
  CHECK(Word{} < Word({2}));
  CHECK(Word({2}) < Word({1, 1}));
  CHECK(Word({1, 2}) < Word({2, 1}));
  CHECK_FALSE(Word({2, 1}) < Word({1, 2}));

  const auto words = words_up_to(2, 3);
  CHECK(words.size() == 1 + 2 + 4 + 8);
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(words.front().empty());
  CHECK(words_up_to(3, -1).empty());
}

TEST_CASE("poly_eval examples")
{
  SUBCASE("unit word gives the identity")
  {
    const FreePoly one = FreePoly::constant(2, 1.0);
    const MatrixTuple x({mat({{1, 2}, {3, 4}}), mat({{0, 1}, {1, 0}})});
    CHECK((poly_eval(one, x) - Matrix::Identity(2, 2)).norm() == 0.0);
  }
  SUBCASE("square of a nilpotent")
  {
    const FreePoly p = x(1, 1) * x(1, 1);
    CHECK(poly_eval(p, tuple1(mat({{0, 1}, {0, 0}}))).norm() == 0.0);
  }
  SUBCASE("commutator, by hand")
  {
    const FreePoly p = x(2, 1) * x(2, 2) - x(2, 2) * x(2, 1);
    const MatrixTuple t({mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, -1}})});
    CHECK((poly_eval(p, t) - mat({{0, -2}, {0, 0}})).norm() == 0.0);
  }
}

TEST_CASE("delta_eval examples")
{
  SUBCASE("scalar")
  {
    CHECK(delta_eval(scalar_delta(), tuple1(mat({{0.5}})))(0, 0) == Complex(0.5));
  }
  SUBCASE("bidisk")
  {
    const auto d = DeltaMatrix::diagonal_variables(2);
    const MatrixTuple t = MatrixTuple::scalars({0.3, 0.9});
    CHECK((delta_eval(d, t) - mat({{0.3, 0}, {0, 0.9}})).norm() == 0.0);
  }
  SUBCASE("row block assembly")
  {
    const DeltaMatrix row(1, 2, {x(2, 1), x(2, 2)});
    const Matrix A = mat({{1, 2}, {3, 4}});
    const Matrix B = mat({{5, Complex(0, 6)}, {7, 8}});
    const Matrix out = delta_eval(row, MatrixTuple({A, B}));
    REQUIRE(out.rows() == 2);
    REQUIRE(out.cols() == 4);
    Matrix expected(2, 4);
    for (int i = 0; i < 2; i++)
    {
      for (int j = 0; j < 2; j++)
      {
        expected(i, j) = A(i, j);
        expected(i, 2 + j) = B(i, j);
      }
    }
    CHECK((out - expected).norm() == 0.0);
  }
}

TEST_CASE("poly_arith examples")
{
  const FreePoly zero = x(2, 1) + (-x(2, 1));
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);

  const FreePoly ab = x(2, 1) * x(2, 2);
  const FreePoly ba = x(2, 2) * x(2, 1);
  CHECK(ab.coeff(Word({1, 2})) == Complex(1.0));
  CHECK(ab != ba);

  const FreePoly one_plus = FreePoly::constant(1, 1.0) + x(1, 1);
  const FreePoly sq = one_plus * one_plus;
  CHECK(sq.terms().size() == 3);
  CHECK(sq.coeff(Word{}) == Complex(1.0));
  CHECK(sq.coeff(Word({1})) == Complex(2.0));
  CHECK(sq.coeff(Word({1, 1})) == Complex(1.0));
  CHECK(sq.degree() == 2);
}

TEST_CASE("canonical form prunes tiny coefficients")
{
  const FreePoly p(1, {{Word({1}), 1e-15}, {Word{}, 1.0}});
  CHECK(p.terms().size() == 1);
  const FreePoly q = x(1, 1).scaled(1e-15);
  CHECK(q.is_zero());
}

TEST_CASE("errors")
{
  CHECK_THROWS_AS(x(2, 1) + x(3, 1), InputError);
  CHECK_THROWS_AS(FreePoly(2, {{Word({3}), 1.0}}), InputError);
  CHECK_THROWS_AS(poly_eval(x(2, 1), tuple1(mat({{1}}))), InputError);
  CHECK_THROWS_AS(DeltaMatrix(1, 2, {x(1, 1), x(2, 1)}), InputError);
  CHECK_THROWS_AS(MatrixTuple({Matrix::Zero(2, 2), Matrix::Zero(3, 3)}), InputError);
}

TEST_CASE("evaluation is a unital homomorphism")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; trial++)
  {
    const int d = 1 + trial % 3;
    const int n = 1 + trial % 4;
    const FreePoly p = random_poly(d, 3, 4, rng) + FreePoly::constant(d, 0.3);
    const FreePoly q = random_poly(d, 2, 3, rng);
    const MatrixTuple t = random_gaussian_tuple(d, n, rng);
    const Matrix pq = poly_eval(p * q, t);
    const Matrix prod = poly_eval(p, t) * poly_eval(q, t);
    CHECK((pq - prod).norm() <= 1e-12 * std::max(1.0, prod.norm()));
    const Matrix sum = poly_eval(p + q, t);
    CHECK((sum - poly_eval(p, t) - poly_eval(q, t)).norm() <= 1e-12 * std::max(1.0, sum.norm()));
    CHECK(poly_eval(p, t).rows() == n);
  }
}

TEST_CASE("memoized evaluation matches word-by-word evaluation")
{
  std::mt19937_64 rng(5);
  FreePoly p(2);
  for (const auto &w : words_up_to(2, 4))  // 31 words; add more to exceed the cutoff
  {
    p = p + FreePoly::monomial(2, w, Complex(0.1 * w.length(), 0.05));
  }
  p = p + FreePoly::monomial(2, Word({2, 2, 1, 1, 2}), 0.7) +
      FreePoly::monomial(2, Word({1, 2, 1, 2, 1}), -0.2);
  REQUIRE(p.terms().size() > 32);
  const MatrixTuple t = random_gaussian_tuple(2, 3, rng);
  Matrix oracle = Matrix::Zero(3, 3);
  for (const auto &[w, c] : p.terms())
  {
    oracle += c * word_eval(w, t);
  }
  CHECK((poly_eval(p, t) - oracle).norm() <= 1e-12 * oracle.norm());
}

TEST_CASE("polynomials preserve intertwiners and direct sums")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; trial++)
  {
    const int d = 1 + trial % 3;
    const FreePoly p = random_poly(d, 3, 5, rng) + FreePoly::constant(d, 0.5);
    const MatrixTuple a = random_gaussian_tuple(d, 2, rng);
    const MatrixTuple b = random_gaussian_tuple(d, 3, rng);

    // S = [I; 0] intertwines a with a ⊕ b.
    Matrix S = Matrix::Zero(5, 2);
    S.topRows(2) = Matrix::Identity(2, 2);
    const MatrixTuple ab = direct_sum(a, b);
    REQUIRE(intertwine_check(a, ab, S) == 0.0);
    const Matrix lhs = S * poly_eval(p, a);
    const Matrix rhs = poly_eval(p, ab) * S;
    CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, lhs.norm()));

    const Matrix split = block_diag(poly_eval(p, a), poly_eval(p, b));
    CHECK((poly_eval(p, ab) - split).norm() <= 1e-12 * std::max(1.0, split.norm()));
  }
}
