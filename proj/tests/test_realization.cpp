// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/random.hpp"
#include "ncreal/realization.hpp"

using namespace ncreal;
using namespace ncreal::testing;

namespace
{

// (0.5 + z)(1 + 0.5 z)^{-1}
Matrix moebius(const Matrix &z)
{
  const Matrix one = Matrix::Identity(z.rows(), z.cols());
  return (0.5 * one + z) * (one + 0.5 * z).inverse();
}

struct RandomCase
{
  DeltaMatrix delta;
  Colligation c;
};

RandomCase random_case(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> I(1, 2), extra(0, 1), m(1, 3);
  const int rows = I(rng);
  DeltaMatrix delta = random_delta(2, rows, rows + extra(rng), 2, rng);
  Colligation c = random_colligation(delta, m(rng), rng);
  return {delta, c};
}

}  // namespace

TEST_CASE("isometry_check")
{
  CHECK(isometry_check(Matrix::Identity(3, 3)) == 0.0);
  CHECK(isometry_check(2.0 * Matrix::Identity(2, 2)) == doctest::Approx(3.0));
  CHECK(isometry_check(moebius_colligation().V()) <= 1e-15);
  std::mt19937_64 rng(20);
  CHECK(isometry_check(random_isometry(5, 3, rng)) <= 1e-14);
}

TEST_CASE("Colligation shapes")
{
  CHECK_THROWS_AS(Colligation(scalar_delta(), 1, Matrix::Identity(3, 3)), InputError);
  CHECK_THROWS_AS(Colligation(scalar_delta(), -1, Matrix::Identity(1, 1)), InputError);
  const Colligation c(scalar_delta(), 1, 0.0, mat({{1}}), mat({{1}}), mat({{0}}));
  CHECK((c.V() - identity_colligation().V()).norm() == 0.0);
}

TEST_CASE("eval_realization examples")
{
  const auto id = identity_colligation();
  const Matrix z = mat({{0.2, 0.3}, {0.0, -0.1}});
  CHECK((eval_realization(id, tuple1(z)) - z).norm() <= 1e-15);

  const auto mob = moebius_colligation();
  CHECK(std::abs(eval_realization(mob, tuple1(mat({{0.5}})))(0, 0) - 0.8) <= 1e-14);
  CHECK(std::abs(eval_realization(mob, tuple1(mat({{0.0}})))(0, 0) - 0.5) <= 1e-14);
  CHECK((eval_realization(mob, tuple1(z)) - moebius(z)).norm() <= 1e-14);
  const Matrix nil = 0.5 * E(2, 1, 2);
  CHECK((eval_realization(mob, tuple1(nil)) - moebius(nil)).norm() <= 1e-14);

  CHECK_THROWS_AS(eval_realization(mob, tuple1(mat({{1.5}}))), DomainError);
  CHECK_THROWS_AS(eval_realization(mob, MatrixTuple::scalars({0.1, 0.1})), InputError);
}

TEST_CASE("derive_model examples")
{
  const auto mob = moebius_colligation();
  const Matrix u = derive_model(mob, tuple1(mat({{0.5}})));
  CHECK(u.rows() == 1);
  CHECK(std::abs(u(0, 0) - std::sqrt(0.75) / 1.25) <= 1e-14);

  const auto id = identity_colligation();
  const MatrixTuple x = tuple1(mat({{0.6}}));
  const Matrix ui = derive_model(id, x);
  CHECK(std::abs(ui(0, 0) - 1.0) <= 1e-15);
  // 1 - |phi|^2 = |u|^2 (1 - |x|^2)
  const Complex phi = eval_realization(id, x)(0, 0);
  CHECK(std::abs(1.0 - std::norm(phi) - std::norm(ui(0, 0)) * (1.0 - 0.36)) <= 1e-15);

  const Colligation inner(scalar_delta(), 0, Matrix::Identity(1, 1));
  CHECK(derive_model(inner, x).rows() == 0);
  CHECK(std::abs(eval_realization(inner, x)(0, 0) - 1.0) <= 1e-15);
}

TEST_CASE("verify_model")
{
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; t++)
  {
    auto rc = random_case(rng);
    std::vector<MatrixTuple> pts;
    for (int i = 0; i < 4; i++)
    {
      pts.push_back(sample_member(rc.delta, 1 + i % 2, rng));
    }
    ModelData md = build_model(rc.c, pts);
    CHECK(verify_model(md, rc.delta) <= 1e-10);

    md.uvecs[0](0, 0) += 1e-3;
    CHECK(verify_model(md, rc.delta) >= 1e-4);
  }

  const auto single = build_model(moebius_colligation(), {tuple1(mat({{0.3}}))});
  CHECK(verify_model(single, scalar_delta()) <= 1e-15);
}

TEST_CASE("contractivity")
{
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10; t++)
  {
    auto rc = random_case(rng);
    const double worst = contractivity_sample(rc.c, 30, 100 + t, 3);
    CHECK(worst <= 1 + 1e-9);
    CHECK(worst == contractivity_sample(rc.c, 30, 100 + t, 3));
  }
  CHECK(contractivity_sample(moebius_colligation(), 50, 1, 2) < 1.0);
}

TEST_CASE("realized functions respect intertwiners and direct sums")
{
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; t++)
  {
    auto rc = random_case(rng);
    const MatrixTuple x = sample_member(rc.delta, 2, rng);
    const MatrixTuple y = sample_member(rc.delta, 3, rng);
    const Matrix fx = eval_realization(rc.c, x);
    const Matrix fy = eval_realization(rc.c, y);
    const Matrix fxy = eval_realization(rc.c, direct_sum(x, y));
    CHECK((fxy - block_diag(fx, fy)).norm() <= 1e-9);

    const Matrix s = Matrix::Identity(2, 2) + 0.05 * random_matrix(2, 2, rng);
    const MatrixTuple xs = similarity(x, s);
    if (!membership(rc.delta, xs).member)
    {
      continue;
    }
    const Matrix S = s.inverse();
    REQUIRE(intertwine_check(x, xs, S) <= 1e-12);
    const Matrix fxs = eval_realization(rc.c, xs);
    CHECK((S * fx - fxs * S).norm() <= 1e-9);
  }
}

TEST_CASE("forward differences converge at first order")
{
  const auto mob = moebius_colligation();
  std::mt19937_64 rng(24);
  const MatrixTuple x = tuple1(0.2 * random_matrix(2, 2, rng));
  const MatrixTuple h = tuple1(random_matrix(2, 2, rng).normalized());
  // Derivative oracle: exact differential of the Moebius map.
  const Matrix one = Matrix::Identity(2, 2);
  const Matrix r = (one + 0.5 * x[0]).inverse();
  const Matrix exact = h[0] * r - (0.5 * one + x[0]) * r * (0.5 * h[0]) * r;

  std::vector<double> errs;
  for (double t : {1e-2, 1e-3, 1e-4})
  {
    const Matrix fd =
        (eval_realization(mob, x + h.scaled(t)) - eval_realization(mob, x)) / t;
    errs.push_back((fd - exact).norm());
  }
  for (std::size_t i = 0; i + 1 < errs.size(); i++)
  {
    const double slope = std::log10(errs[i] / errs[i + 1]);
    CHECK(slope >= 0.9);
    CHECK(slope <= 1.1);
  }
}
