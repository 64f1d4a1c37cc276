// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ncreal/algebra.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/random.hpp"
#include "ncreal/synthesis.hpp"

using namespace ncreal;
using namespace ncreal::testing;

namespace
{

std::vector<MatrixTuple> scalar_points(std::initializer_list<double> xs)
{
  std::vector<MatrixTuple> pts;
  for (double v : xs)
  {
    pts.push_back(tuple1(mat({{v}})));
  }
  return pts;
}

void check_round_trip(const Colligation &source, const std::vector<MatrixTuple> &pts,
                      double tol)
{
  const ModelData md = build_model(source, pts);
  const Colligation out = lurking_isometry(md, source.delta());
  CHECK(out.isometry_residual() <= 1e-9);
  const auto res = agreement_residuals(out, pts, md.values);
  for (double r : res)
  {
    CHECK(r <= tol);
  }
}

}  // namespace

TEST_CASE("lurking isometry reproduces the model")
{
  check_round_trip(moebius_colligation(), scalar_points({0.0, 0.3, 0.5}), 1e-10);
  check_round_trip(identity_colligation(), {tuple1(0.2 * E(2, 1, 2))}, 1e-10);

  const auto md = build_model(identity_colligation(), scalar_points({0.0}));
  const Colligation single = lurking_isometry(md, scalar_delta());
  CHECK(std::abs(single.A()) <= 1e-12);

  std::mt19937_64 rng(30);
  for (int t = 0; t < 10; t++)
  {
    const DeltaMatrix delta = random_delta(2, 1, 1 + t % 2, 2, rng);
    const Colligation c = random_colligation(delta, 1 + t % 3, rng);
    std::vector<MatrixTuple> pts;
    for (int i = 0; i < 4; i++)
    {
      pts.push_back(sample_member(delta, 1 + i % 3, rng));
    }
    check_round_trip(c, pts, 1e-8);
  }
}

TEST_CASE("lurking isometry rejects a non-model")
{
  ModelData md = build_model(moebius_colligation(), scalar_points({0.0, 0.5}));
  md.values[1](0, 0) += 0.05;
  CHECK_THROWS_AS(lurking_isometry(md, scalar_delta()), InfeasibleError);
  md.values.pop_back();
  CHECK_THROWS_AS(lurking_isometry(md, scalar_delta()), InputError);
}

TEST_CASE("interpolate_finite")
{
  const Colligation mob = moebius_colligation();
  InterpolationProblem prob{scalar_delta(), scalar_points({0.1, 0.4}), {}, 1};
  const Colligation out = interpolate_finite(prob, mob);
  for (double x : {0.1, 0.4})
  {
    const auto p = tuple1(mat({{x}}));
    CHECK(std::abs(eval_realization(out, p)(0, 0) - eval_realization(mob, p)(0, 0)) <= 1e-10);
  }

  const MatrixTuple node = tuple1(mat({{0.3}}));
  prob.nodes = {node, direct_sum(node, node)};
  const Colligation dup = interpolate_finite(prob, mob);
  const auto res = agreement_residuals(dup, prob.nodes,
                                       {eval_realization(mob, prob.nodes[0]),
                                        eval_realization(mob, prob.nodes[1])});
  CHECK(res[0] <= 1e-10);
  CHECK(res[1] <= 1e-10);

  prob.nodes.clear();
  CHECK((interpolate_finite(prob, mob).V() - mob.V()).norm() == 0.0);

  prob.nodes = scalar_points({1.2});
  CHECK_THROWS_AS(interpolate_finite(prob, mob), DomainError);

  prob.nodes = scalar_points({0.2});
  prob.delta = DeltaMatrix(1, 1, {x(1, 1).scaled(0.5)});
  CHECK_THROWS_AS(interpolate_finite(prob, mob), InputError);
}

TEST_CASE("fit_polynomial")
{
  const FreePoly c = fit_polynomial(tuple1(mat({{0.5}})), mat({{0.8}}), 0);
  CHECK(std::abs(c.coeff(Word{}) - 0.8) <= 1e-12);

  const MatrixTuple lambda = tuple1(mat({{0.2, 0}, {0, 0.5}}));
  const Matrix w = mat({{0, 0}, {0, 0.27}});
  const FreePoly p = fit_polynomial(lambda, w, 1);
  CHECK(std::abs(p.coeff(Word{}) + 0.18) <= 1e-10);
  CHECK(std::abs(p.coeff(Word{{1}}) - 0.9) <= 1e-10);
  CHECK((poly_eval(p, lambda) - w).norm() <= 1e-12);

  try
  {
    fit_polynomial(lambda, w, 0);
    FAIL("expected infeasible");
  }
  catch (const FitInfeasible &e)
  {
    CHECK_FALSE(e.saturated);
    CHECK(e.residual > 0.1);
  }

  try
  {
    fit_polynomial(tuple1(E(2, 1, 2)), E(2, 2, 1), 1);
    FAIL("expected infeasible");
  }
  catch (const FitInfeasible &e)
  {
    CHECK(e.saturated);
    CHECK(e.residual == doctest::Approx(1.0).epsilon(1e-10));
  }

  CHECK_THROWS_AS(fit_polynomial(lambda, mat({{1}}), 1), InputError);
}

TEST_CASE("ideal_basis")
{
  const auto scalar = ideal_basis(tuple1(mat({{0.5}})), 2);
  CHECK(scalar.dim() == 2);
  const auto nil = ideal_basis(tuple1(E(2, 1, 2)), 2);
  CHECK(nil.dim() == 1);
  CHECK(std::abs(std::abs(nil.basis[0].coeff(Word{{1, 1}})) - 1.0) <= 1e-12);
  const MatrixTuple diag = tuple1(mat({{0.2, 0}, {0, 0.5}}));
  CHECK(ideal_basis(diag, 1).dim() == 0);
  CHECK(ideal_basis(diag, 2).dim() == 1);

  std::mt19937_64 rng(31);
  const MatrixTuple z = random_gaussian_tuple(2, 2, rng);
  const auto ideal = ideal_basis(z, 2);
  CHECK(ideal_residual(ideal, z) <= 1e-12);
  // Coefficient vectors are orthonormal.
  for (int i = 0; i < ideal.dim(); i++)
  {
    for (int j = 0; j < ideal.dim(); j++)
    {
      Complex g = 0.0;
      for (const auto &w : ideal.words)
      {
        g += std::conj(ideal.basis[j].coeff(w)) * ideal.basis[i].coeff(w);
      }
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
  // Relations hold on amplifications too.
  CHECK(ideal_residual(ideal, amplify(z, 3)) <= 1e-12);
}

TEST_CASE("check_condition_ii")
{
  const DeltaMatrix disc = scalar_delta();
  const MatrixTuple lambda = tuple1(mat({{0.2, 0}, {0, 0.5}}));
  const Matrix w = eval_realization(moebius_colligation(), lambda);
  const FreePoly p = fit_polynomial(lambda, w, 1);
  const auto ok = check_condition_ii(p, disc, lambda, ideal_basis(lambda, 2), 60, 3);
  CHECK(ok.max_norm <= 1 + 1e-6);
  CHECK((ok.points.front()[0] - lambda[0]).norm() == 0.0);
  CHECK(ok.points.size() > 1);

  const MatrixTuple half = tuple1(mat({{0.5}}));
  const FreePoly twice = x(1, 1).scaled(2.0);
  const auto refuted = check_condition_ii(twice, disc, half, ideal_basis(half, 0), 60, 3);
  CHECK(refuted.max_norm > 1.0);

  const auto pinned = check_condition_ii(twice, disc, half, ideal_basis(half, 1), 60, 3);
  CHECK(pinned.max_norm == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto &pt : pinned.points)
  {
    CHECK(ideal_residual(ideal_basis(half, 1), pt) <= kIdealTol);
  }

  CHECK_THROWS_AS(check_condition_ii(twice, disc, half, ideal_basis(half, 1), 0, 3),
                  InputError);
}
