// SPDX-License-Identifier: Apache-2.0

#include "ncreal/realization.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ncreal/errors.hpp"

namespace ncreal
{

namespace
{

constexpr double kResolventMinRcond = 1e-14;

void check_shape(const DeltaMatrix &delta, int m, const Matrix &V)
{
  if (m < 0)
  {
    throw InputError("Colligation: model dimension must be >= 0");
  }
  const auto rows = 1 + static_cast<Eigen::Index>(m) * delta.cols();
  const auto cols = 1 + static_cast<Eigen::Index>(m) * delta.rows();
  if (V.rows() != rows || V.cols() != cols)
  {
    throw InputError("Colligation: block matrix must be " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " for m = " + std::to_string(m) + ", I = " +
                     std::to_string(delta.rows()) + ", J = " + std::to_string(delta.cols()));
  }
  if (!all_finite(V))
  {
    throw InputError("Colligation: non-finite entries");
  }
}

// The pieces shared by evaluation and model derivation at x.
struct Resolvent
{
  Matrix lifted_delta;  // 1_M ⊗ delta(x)
  Matrix u;             // [1 - (D ⊗ 1)(1 ⊗ delta(x))]^{-1} (C ⊗ 1)
};

Resolvent solve_resolvent(const Colligation &c, const MatrixTuple &x)
{
  require_member(c.delta(), x);
  const int n = x.level();
  const int m = c.model_dim();
  const Matrix In = Matrix::Identity(n, n);
  Resolvent out;
  out.lifted_delta = kron(Matrix::Identity(m, m), delta_eval(c.delta(), x));
  if (m == 0)
  {
    out.u = Matrix(0, n);
    return out;
  }
  const Matrix DL = kron(c.D(), In) * out.lifted_delta;
  const Matrix lhs = Matrix::Identity(DL.rows(), DL.cols()) - DL;
  Eigen::PartialPivLU<Matrix> lu(lhs);
  if (!(lu.rcond() > kResolventMinRcond))
  {
    throw SingularError("singular resolvent at x (rcond " + std::to_string(lu.rcond()) + ")");
  }
  out.u = lu.solve(kron(c.C(), In));
  return out;
}

}  // namespace

Colligation::Colligation(DeltaMatrix delta, int m, Matrix V)
  : delta_(std::move(delta)), m_(m), V_(std::move(V))
{
  check_shape(delta_, m_, V_);
}

Colligation::Colligation(DeltaMatrix delta, int m, Complex A, const Matrix &B, const Matrix &C,
                         const Matrix &D)
  : delta_(std::move(delta)), m_(m)
{
  const Eigen::Index mi = static_cast<Eigen::Index>(m) * delta_.rows();
  const Eigen::Index mj = static_cast<Eigen::Index>(m) * delta_.cols();
  if (B.rows() != 1 || B.cols() != mi || C.rows() != mj || C.cols() != 1 || D.rows() != mj ||
      D.cols() != mi)
  {
    throw InputError("Colligation: block shapes inconsistent with m, I, J");
  }
  V_.resize(1 + mj, 1 + mi);
  V_(0, 0) = A;
  V_.block(0, 1, 1, mi) = B;
  V_.block(1, 0, mj, 1) = C;
  V_.block(1, 1, mj, mi) = D;
  check_shape(delta_, m_, V_);
}

double Colligation::isometry_residual() const
{
  return isometry_check(V_);
}

double isometry_check(const Matrix &V)
{
  return op_norm(V.adjoint() * V - Matrix::Identity(V.cols(), V.cols()));
}

Matrix eval_realization(const Colligation &c, const MatrixTuple &x)
{
  const Resolvent r = solve_resolvent(c, x);
  const int n = x.level();
  const Matrix In = Matrix::Identity(n, n);
  Matrix out = c.A() * In;
  if (c.model_dim() > 0)
  {
    out += kron(c.B(), In) * r.lifted_delta * r.u;
  }
  return out;
}

Matrix derive_model(const Colligation &c, const MatrixTuple &x)
{
  return solve_resolvent(c, x).u;
}

ModelData build_model(const Colligation &c, const std::vector<MatrixTuple> &points)
{
  ModelData md;
  md.m = c.model_dim();
  for (const auto &x : points)
  {
    md.points.push_back(x);
    md.values.push_back(eval_realization(c, x));
    md.uvecs.push_back(derive_model(c, x));
  }
  return md;
}

double verify_model(const ModelData &md, const DeltaMatrix &delta)
{
  const std::size_t count = md.points.size();
  if (md.values.size() != count || md.uvecs.size() != count)
  {
    throw InputError("verify_model: points, values and uvecs differ in length");
  }
  std::vector<Matrix> deltas;
  for (std::size_t i = 0; i < count; i++)
  {
    const int n = md.points[i].level();
    const auto urows = static_cast<Eigen::Index>(md.m) * delta.cols() * n;
    if (md.values[i].rows() != n || md.values[i].cols() != n)
    {
      throw InputError("verify_model: value " + std::to_string(i) + " must be " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
    if (md.uvecs[i].rows() != urows || md.uvecs[i].cols() != n)
    {
      throw InputError("verify_model: uvec " + std::to_string(i) + " must be " +
                       std::to_string(urows) + "x" + std::to_string(n));
    }
    deltas.push_back(delta_eval(delta, md.points[i]));
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < count; i++)
  {
    for (std::size_t j = 0; j < count; j++)
    {
      const int n = md.points[i].level();
      if (md.points[j].level() != n)
      {
        continue;
      }
      const Matrix In = Matrix::Identity(n, n);
      const Matrix inner = Matrix::Identity(deltas[i].cols(), deltas[i].cols()) -
                           deltas[j].adjoint() * deltas[i];
      const Matrix lifted = kron(Matrix::Identity(md.m, md.m), inner);
      const Matrix lhs = In - md.values[j].adjoint() * md.values[i];
      const Matrix rhs = md.uvecs[j].adjoint() * lifted * md.uvecs[i];
      worst = std::max(worst, op_norm(lhs - rhs));
    }
  }
  return worst;
}

double contractivity_sample(const Colligation &c, int trials, std::uint64_t seed, int level_max)
{
  if (trials < 1 || level_max < 1)
  {
    throw InputError("contractivity_sample: trials and level_max must be >= 1");
  }
  double worst = 0.0;
  for (int t = 0; t < trials; t++)
  {
    // Independent stream per trial.
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1));
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(level_max));
    const MatrixTuple x = sample_member(c.delta(), n, rng);
    worst = std::max(worst, op_norm(eval_realization(c, x)));
  }
  return worst;
}

}  // namespace ncreal
