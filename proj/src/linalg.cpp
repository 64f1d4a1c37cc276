// SPDX-License-Identifier: Apache-2.0

#include "ncreal/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "ncreal/errors.hpp"

namespace ncreal
{

Matrix kron(const Matrix &a, const Matrix &b)
{
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); i++)
  {
    for (Eigen::Index j = 0; j < a.cols(); j++)
    {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool all_finite(const Matrix &m)
{
  for (Eigen::Index j = 0; j < m.cols(); j++)
  {
    for (Eigen::Index i = 0; i < m.rows(); i++)
    {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
      {
        return false;
      }
    }
  }
  return true;
}

double op_norm(const Matrix &m)
{
  if (!all_finite(m))
  {
    throw InputError("op_norm: matrix has non-finite entries");
  }
  if (m.size() == 0)
  {
    return 0.0;
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix block_diag(const Matrix &a, const Matrix &b)
{
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Matrix orth(const Matrix &m, double rel_tol)
{
  if (m.cols() == 0 || m.rows() == 0)
  {
    return Matrix(m.rows(), 0);
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto &sigma = svd.singularValues();
  const double cutoff = rel_tol * sigma(0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff)
  {
    rank++;
  }
  return svd.matrixU().leftCols(rank);
}

Matrix orth_complement(const Matrix &q, Eigen::Index dim)
{
  if (q.cols() == 0)
  {
    return Matrix::Identity(dim, dim);
  }
  // The trailing columns of a full unitary factor span the complement.
  Eigen::HouseholderQR<Matrix> qr(q);
  Matrix full = qr.householderQ() * Matrix::Identity(dim, dim);
  return full.rightCols(dim - q.cols());
}

Matrix null_space(const Matrix &m, double rel_tol)
{
  if (m.cols() == 0)
  {
    return Matrix(0, 0);
  }
  if (m.rows() == 0)
  {
    return Matrix::Identity(m.cols(), m.cols());
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto &sigma = svd.singularValues();
  const double cutoff = rel_tol * sigma(0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff)
  {
    rank++;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng)
{
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; j++)
  {
    for (Eigen::Index i = 0; i < rows; i++)
    {
      const double re = normal(rng);
      m(i, j) = Complex(re, normal(rng));
    }
  }
  return m;
}

Vector vec(const Matrix &m)
{
  return Eigen::Map<const Vector>(m.data(), m.size());
}

}  // namespace ncreal
