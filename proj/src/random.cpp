// SPDX-License-Identifier: Apache-2.0

#include "ncreal/random.hpp"

#include <cmath>

#include "ncreal/errors.hpp"

namespace ncreal
{

Matrix random_isometry(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng)
{
  if (rows < cols)
  {
    throw InputError("random_isometry: need rows >= cols");
  }
  const Matrix g = random_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  // Fix column phases with the diagonal of R.
  const Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < cols; j++)
  {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0)
    {
      q.col(j) *= rjj / std::abs(rjj);
    }
  }
  return q;
}

FreePoly random_poly(int d, int max_degree, int terms, std::mt19937_64 &rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> length(1, std::max(1, max_degree));
  std::uniform_int_distribution<int> letter(1, d);
  FreePoly::Terms out;
  for (int t = 0; t < terms; t++)
  {
    std::vector<int> letters(static_cast<std::size_t>(length(rng)));
    for (auto &l : letters)
    {
      l = letter(rng);
    }
    const double re = normal(rng);
    out[Word(std::move(letters))] += Complex(re, normal(rng)) / std::sqrt(2.0 * terms);
  }
  return FreePoly(d, std::move(out));
}

DeltaMatrix random_delta(int d, int rows, int cols, int max_degree, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> nterms(1, 3);
  std::vector<FreePoly> entries;
  for (int k = 0; k < rows * cols; k++)
  {
    entries.push_back(random_poly(d, max_degree, nterms(rng), rng));
  }
  return DeltaMatrix(rows, cols, std::move(entries));
}

Colligation random_colligation(const DeltaMatrix &delta, int m, std::mt19937_64 &rng)
{
  const Eigen::Index rows = 1 + static_cast<Eigen::Index>(m) * delta.cols();
  const Eigen::Index cols = 1 + static_cast<Eigen::Index>(m) * delta.rows();
  return Colligation(delta, m, random_isometry(rows, cols, rng));
}

namespace
{

DeltaMatrix scalar_delta()
{
  return DeltaMatrix(1, 1, {FreePoly::variable(1, 1)});
}

}  // namespace

Colligation moebius_colligation()
{
  const double c = std::sqrt(0.75);
  Matrix V(2, 2);
  V << 0.5, c, c, -0.5;
  return Colligation(scalar_delta(), 1, V);
}

Colligation identity_colligation()
{
  Matrix V(2, 2);
  V << 0.0, 1.0, 1.0, 0.0;
  return Colligation(scalar_delta(), 1, V);
}

}  // namespace ncreal
