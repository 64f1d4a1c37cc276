// SPDX-License-Identifier: Apache-2.0

#include "ncreal/mattuple.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncreal/errors.hpp"

namespace ncreal
{

MatrixTuple::MatrixTuple(std::vector<Matrix> mats) : mats_(std::move(mats))
{
  if (mats_.empty())
  {
    throw InputError("MatrixTuple: need at least one component");
  }
  const auto n = mats_.front().rows();
  if (n < 1)
  {
    throw InputError("MatrixTuple: level must be >= 1");
  }
  for (std::size_t r = 0; r < mats_.size(); r++)
  {
    if (mats_[r].rows() != n || mats_[r].cols() != n)
    {
      throw InputError("MatrixTuple: component " + std::to_string(r + 1) +
                       " is not " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (!all_finite(mats_[r]))
    {
      throw InputError("MatrixTuple: component " + std::to_string(r + 1) +
                       " has non-finite entries");
    }
  }
}

MatrixTuple MatrixTuple::zero(int d, int n)
{
  return MatrixTuple(std::vector<Matrix>(d, Matrix::Zero(n, n)));
}

MatrixTuple MatrixTuple::scalars(const std::vector<Complex> &values)
{
  std::vector<Matrix> mats;
  for (Complex v : values)
  {
    mats.push_back(Matrix::Constant(1, 1, v));
  }
  return MatrixTuple(std::move(mats));
}

MatrixTuple MatrixTuple::operator+(const MatrixTuple &other) const
{
  if (other.dims() != dims() || other.level() != level())
  {
    throw InputError("MatrixTuple: sum of tuples with different shapes");
  }
  std::vector<Matrix> out;
  for (int r = 0; r < dims(); r++)
  {
    out.push_back(mats_[r] + other[r]);
  }
  return MatrixTuple(std::move(out));
}

MatrixTuple MatrixTuple::scaled(Complex c) const
{
  std::vector<Matrix> out;
  for (const auto &m : mats_)
  {
    out.push_back(c * m);
  }
  return MatrixTuple(std::move(out));
}

double MatrixTuple::max_norm() const
{
  double out = 0.0;
  for (const auto &m : mats_)
  {
    out = std::max(out, op_norm(m));
  }
  return out;
}

PolyhedronReport membership(const DeltaMatrix &delta, const MatrixTuple &x, double tol)
{
  PolyhedronReport report;
  report.norm = op_norm(delta_eval(delta, x));
  report.margin = 1.0 - report.norm;
  report.member = report.norm < 1.0 - tol;
  return report;
}

void require_member(const DeltaMatrix &delta, const MatrixTuple &x, double tol)
{
  const auto report = membership(delta, x, tol);
  if (!report.member)
  {
    throw DomainError("outside polyhedron: ||delta(x)|| = " + std::to_string(report.norm));
  }
}

MatrixTuple direct_sum(const MatrixTuple &x, const MatrixTuple &y)
{
  if (x.dims() != y.dims())
  {
    throw InputError("direct_sum: tuples have different numbers of components");
  }
  std::vector<Matrix> out;
  for (int r = 0; r < x.dims(); r++)
  {
    out.push_back(block_diag(x[r], y[r]));
  }
  return MatrixTuple(std::move(out));
}

MatrixTuple direct_sum(const std::vector<MatrixTuple> &xs)
{
  if (xs.empty())
  {
    throw InputError("direct_sum: empty list");
  }
  MatrixTuple out = xs.front();
  for (std::size_t i = 1; i < xs.size(); i++)
  {
    out = direct_sum(out, xs[i]);
  }
  return out;
}

MatrixTuple amplify(const MatrixTuple &x, int k)
{
  if (k < 1)
  {
    throw InputError("amplify: k must be >= 1");
  }
  std::vector<Matrix> out;
  for (const auto &m : x.mats())
  {
    out.push_back(kron(Matrix::Identity(k, k), m));
  }
  return MatrixTuple(std::move(out));
}

MatrixTuple similarity(const MatrixTuple &x, const Matrix &s, SimilarityOptions opts)
{
  if (s.rows() != x.level() || s.cols() != x.level())
  {
    throw InputError("similarity: s must be " + std::to_string(x.level()) + "x" +
                     std::to_string(x.level()));
  }
  Eigen::JacobiSVD<Matrix> svd(s);
  const auto &sigma = svd.singularValues();
  const double rcond = sigma(0) > 0.0 ? sigma(sigma.size() - 1) / sigma(0) : 0.0;
  if (rcond == 0.0 || (!opts.allow_ill_conditioned && rcond < kMinReciprocalCondition))
  {
    throw SingularError("similarity: s is numerically singular (rcond " +
                        std::to_string(rcond) + ")");
  }
  return similarity(x, s, Matrix(s.fullPivLu().inverse()));
}

MatrixTuple similarity(const MatrixTuple &x, const Matrix &s, const Matrix &s_inv)
{
  std::vector<Matrix> out;
  for (const auto &m : x.mats())
  {
    out.push_back(s_inv * m * s);
  }
  return MatrixTuple(std::move(out));
}

double intertwine_check(const MatrixTuple &x, const MatrixTuple &y, const Matrix &S)
{
  if (x.dims() != y.dims())
  {
    throw InputError("intertwine_check: tuples have different numbers of components");
  }
  if (S.rows() != y.level() || S.cols() != x.level())
  {
    throw InputError("intertwine_check: S must be level(y) x level(x)");
  }
  double out = 0.0;
  for (int r = 0; r < x.dims(); r++)
  {
    out = std::max(out, op_norm(S * x[r] - y[r] * S));
  }
  return out;
}

MatrixTuple random_gaussian_tuple(int d, int n, std::mt19937_64 &rng)
{
  std::vector<Matrix> mats;
  for (int r = 0; r < d; r++)
  {
    mats.push_back(random_matrix(n, n, rng));
  }
  return MatrixTuple(std::move(mats));
}

namespace
{

// Boundary crossing along t -> t g, bracketed by a member at lo and a non-member at hi.
double bisect_boundary(const DeltaMatrix &delta, const MatrixTuple &g, double lo, double hi)
{
  for (int it = 0; it < 60; it++)
  {
    const double mid = 0.5 * (lo + hi);
    if (membership(delta, g.scaled(mid)).member)
    {
      lo = mid;
    }
    else
    {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MatrixTuple sample_member(const DeltaMatrix &delta, int n, std::mt19937_64 &rng,
                          int max_attempts)
{
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const bool homogeneous = delta.is_linear_homogeneous();
  for (int attempt = 0; attempt < max_attempts; attempt++)
  {
    const MatrixTuple g = random_gaussian_tuple(delta.dims(), n, rng);
    const double rho = 0.99 * std::sqrt(uniform(rng));
    if (homogeneous)
    {
      const double dnorm = op_norm(delta_eval(delta, g));
      // A vanishing delta leaves the direction unconstrained; keep g at unit scale.
      const double scale = dnorm > 0.0 ? rho / dnorm : rho / std::max(1e-300, g.max_norm());
      MatrixTuple x = g.scaled(scale);
      if (membership(delta, x).member)
      {
        return x;
      }
      continue;
    }
    // Shrink the radius geometrically with the attempt count.
    const double r = uniform(rng) * std::pow(0.5, attempt / 50);
    if (r <= 0.0 || !membership(delta, g.scaled(r)).member)
    {
      continue;
    }
    double hi = 2.0 * r;
    int doublings = 0;
    while (membership(delta, g.scaled(hi)).member && doublings < 20)
    {
      hi *= 2.0;
      doublings++;
    }
    if (doublings == 20)
    {
      return g.scaled(r);
    }
    const double t_b = bisect_boundary(delta, g, r, hi);
    MatrixTuple x = g.scaled(r + rho * (t_b - r));
    if (membership(delta, x).member)
    {
      return x;
    }
    return g.scaled(r);
  }
  throw SamplerExhausted("sample_member: no member of the polyhedron found after " +
                         std::to_string(max_attempts) + " attempts");
}

}  // namespace ncreal
