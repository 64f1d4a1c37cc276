// SPDX-License-Identifier: Apache-2.0

// Small builders shared by the unit tests.

#ifndef NCREAL_TESTS_HELPERS_HPP
#define NCREAL_TESTS_HELPERS_HPP

#include <initializer_list>

#include "ncreal/freepoly.hpp"
#include "ncreal/mattuple.hpp"

namespace ncreal::testing
{

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows)
{
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto &row : rows)
  {
    Eigen::Index j = 0;
    for (Complex v : row)
    {
      m(i, j++) = v;
    }
    i++;
  }
  return m;
}

inline Matrix E(int n, int i, int j)
{
  Matrix m = Matrix::Zero(n, n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

inline MatrixTuple tuple1(const Matrix &m)
{
  return MatrixTuple(std::vector<Matrix>{m});
}

inline DeltaMatrix scalar_delta()
{
  return DeltaMatrix(1, 1, {FreePoly::variable(1, 1)});
}

inline FreePoly x(int d, int r)
{
  return FreePoly::variable(d, r);
}

}  // namespace ncreal::testing

#endif
