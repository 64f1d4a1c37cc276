// SPDX-License-Identifier: Apache-2.0

// Reproducible scenarios behind `ncreal demo`. Each one walks a stage of the
// finite-set realization pipeline on seeded random data and records its verdicts.

#include <algorithm>
#include <random>

#include "ncreal/algebra.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/random.hpp"
#include "ncreal/report.hpp"
#include "ncreal/synthesis.hpp"

namespace ncreal
{

namespace
{

int uniform_int(std::mt19937_64 &rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random isometric colligation over a random delta with I <= J.
Colligation random_function(std::mt19937_64 &rng, int max_d, int max_m)
{
  const int d = uniform_int(rng, 1, max_d);
  const int rows = uniform_int(rng, 1, 2);
  const int cols = uniform_int(rng, rows, 2);
  const DeltaMatrix delta = random_delta(d, rows, cols, 2, rng);
  return random_colligation(delta, uniform_int(rng, 1, max_m), rng);
}

// Member whose components are upper triangular, so that Alg(z) is a proper subalgebra.
MatrixTuple upper_triangular_member(const DeltaMatrix &delta, int n, std::mt19937_64 &rng)
{
  const MatrixTuple g = sample_member(delta, n, rng);
  std::vector<Matrix> mats;
  for (const auto &m : g.mats())
  {
    mats.push_back(m.triangularView<Eigen::Upper>());
  }
  MatrixTuple z(std::move(mats));
  while (!membership(delta, z).member)
  {
    z = z.scaled(0.5);
  }
  return z;
}

RunReport demo_step1(std::mt19937_64 &rng)
{
  RunReport report;
  double worst = 0.0;
  bool all_member = true;
  int proper = 0;
  const int trials = 20;
  for (int t = 0; t < trials; t++)
  {
    const Colligation phi = random_function(rng, 2, 3);
    const int n = uniform_int(rng, 2, 4);
    const MatrixTuple z = t % 2 == 0 ? sample_member(phi.delta(), n, rng)
                                     : upper_triangular_member(phi.delta(), n, rng);
    const auto check = theorem_b1_check(phi.delta(), phi, z);
    const Matrix value = eval_realization(phi, z);
    worst = std::max(worst, check.distance / (1.0 + value.norm()));
    all_member = all_member && check.member;
    proper += alg_basis(z).dim() < n * n ? 1 : 0;
  }
  report.check_at_most("relative_distance_to_algebra", worst, 1e-7);
  report.check("all_member", all_member ? 0.0 : 1.0, 0.0, all_member);
  report.result = json_io::Json{{"trials", trials}, {"proper_subalgebras", proper}};
  return report;
}

RunReport demo_step2(std::mt19937_64 &rng)
{
  RunReport report;
  double worst_norm = 0.0, worst_fit = 0.0, worst_consistency = 0.0, worst_sum = 0.0;
  int points = 0;
  const int trials = 5;
  for (int t = 0; t < trials; t++)
  {
    const Colligation phi = random_function(rng, 2, 2);
    std::vector<MatrixTuple> nodes;
    std::vector<Matrix> values;
    const int count = uniform_int(rng, 1, 2);
    for (int k = 0; k < count; k++)
    {
      nodes.push_back(sample_member(phi.delta(), uniform_int(rng, 1, 2), rng));
      values.push_back(eval_realization(phi, nodes.back()));
    }
    const MatrixTuple lambda = direct_sum(nodes);
    const Matrix w = eval_realization(phi, lambda);
    Matrix stacked = values.front();
    for (std::size_t k = 1; k < values.size(); k++)
    {
      stacked = block_diag(stacked, values[k]);
    }
    worst_sum = std::max(worst_sum, op_norm(w - stacked));

    const int bound = alg_basis(lambda).saturation_degree();
    const FreePoly p = fit_polynomial(lambda, w, bound);
    worst_fit = std::max(worst_fit, (poly_eval(p, lambda) - w).norm());
    // Relations of degree saturation + 1 already generate the vanishing ideal.
    const IdealBasis ideal = ideal_basis(lambda, bound + 1);
    const auto cond = check_condition_ii(p, phi.delta(), lambda, ideal, 60, rng());
    worst_norm = std::max(worst_norm, cond.max_norm);
    for (const auto &x : cond.points)
    {
      worst_consistency =
          std::max(worst_consistency, op_norm(poly_eval(p, x) - eval_realization(phi, x)));
    }
    points += static_cast<int>(cond.points.size());
  }
  report.check_at_most("direct_sum_residual", worst_sum, 1e-10);
  report.check_at_most("fit_residual", worst_fit, 1e-8);
  report.check_at_most("condition_ii_max_norm", worst_norm, 1.0 + 1e-6);
  report.check_at_most("ideal_consistency", worst_consistency, 1e-6);
  report.result = json_io::Json{{"trials", trials}, {"sampled_points", points}};
  return report;
}

RunReport demo_roundtrip(std::mt19937_64 &rng)
{
  RunReport report;
  double worst_agree = 0.0, worst_iso = 0.0;
  const int trials = 10;
  for (int t = 0; t < trials; t++)
  {
    const Colligation source = random_function(rng, 2, 3);
    InterpolationProblem prob{source.delta(), {}, {}, 0};
    const int count = uniform_int(rng, 1, 4);
    for (int k = 0; k < count; k++)
    {
      prob.nodes.push_back(sample_member(source.delta(), uniform_int(rng, 1, 3), rng));
    }
    const Colligation out = interpolate_finite(prob, source);
    std::vector<Matrix> values;
    for (const auto &x : prob.nodes)
    {
      values.push_back(eval_realization(source, x));
    }
    for (double r : agreement_residuals(out, prob.nodes, values))
    {
      worst_agree = std::max(worst_agree, r);
    }
    worst_iso = std::max(worst_iso, out.isometry_residual());
  }
  report.check_at_most("max_agreement_residual", worst_agree, 1e-7);
  report.check_at_most("max_isometry_residual", worst_iso, 1e-9);
  report.result = json_io::Json{{"trials", trials}};
  return report;
}

RunReport demo_contractivity(std::mt19937_64 &rng)
{
  RunReport report;
  double worst = 0.0;
  const int functions = 20;
  for (int t = 0; t < functions; t++)
  {
    const Colligation phi = random_function(rng, 3, 3);
    worst = std::max(worst, contractivity_sample(phi, 20, rng(), 3));
  }
  report.check_at_most("max_norm", worst, 1.0 + 1e-9);
  report.result = json_io::Json{{"functions", functions}, {"samples_per_function", 20}};
  return report;
}

}  // namespace

RunReport run_demo(const std::string &name, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  RunReport report;
  if (name == "step1")
  {
    report = demo_step1(rng);
  }
  else if (name == "step2")
  {
    report = demo_step2(rng);
  }
  else if (name == "roundtrip")
  {
    report = demo_roundtrip(rng);
  }
  else if (name == "contractivity")
  {
    report = demo_contractivity(rng);
  }
  else
  {
    throw InputError("unknown demo \"" + name +
                     "\" (expected step1, step2, roundtrip or contractivity)");
  }
  report.command = "demo " + name;
  report.seed = seed;
  Digest digest;
  digest.update(name);
  digest.update(std::to_string(seed));
  report.inputs_digest = digest.hex();
  return report;
}

}  // namespace ncreal
