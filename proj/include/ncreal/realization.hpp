// SPDX-License-Identifier: Apache-2.0

///
/// \file realization.hpp
///
/// Transfer-function realizations over a polynomial polyhedron.
///
/// A colligation is the block matrix
///
///              C     M ⊗ C^I
///   C       [  A       B   ]
///   M ⊗ C^J [  C       D   ]
///
/// with M = C^m, and it realizes
///
///   phi(x) = A ⊗ 1 + (B ⊗ 1)(1 ⊗ delta(x)) [1 - (D ⊗ 1)(1 ⊗ delta(x))]^{-1} (C ⊗ 1).
///
/// Tensor layout throughout: model coordinate outermost, then the I/J coordinate, then the
/// level coordinate of x.
///

#ifndef NCREAL_REALIZATION_HPP
#define NCREAL_REALIZATION_HPP

#include <cstdint>
#include <vector>

#include "ncreal/freepoly.hpp"
#include "ncreal/linalg.hpp"
#include "ncreal/mattuple.hpp"

namespace ncreal
{

inline constexpr double kIsometryTol = 1e-10;

class Colligation
{
public:
  /// From the assembled (1 + mJ) x (1 + mI) matrix V.
  Colligation(DeltaMatrix delta, int m, Matrix V);

  /// From the four blocks.
  Colligation(DeltaMatrix delta, int m, Complex A, const Matrix &B, const Matrix &C,
              const Matrix &D);

  const DeltaMatrix &delta() const { return delta_; }
  int model_dim() const { return m_; }
  const Matrix &V() const { return V_; }

  Complex A() const { return V_(0, 0); }
  Matrix B() const { return V_.block(0, 1, 1, V_.cols() - 1); }
  Matrix C() const { return V_.block(1, 0, V_.rows() - 1, 1); }
  Matrix D() const { return V_.block(1, 1, V_.rows() - 1, V_.cols() - 1); }

  double isometry_residual() const;

private:
  DeltaMatrix delta_;
  int m_;
  Matrix V_;
};

/// ||V^* V - I|| in operator norm.
double isometry_check(const Matrix &V);

/// Evaluate the realization at x. Throws DomainError when x is outside the polyhedron and
/// SingularError when the resolvent cannot be inverted.
Matrix eval_realization(const Colligation &c, const MatrixTuple &x);

/// u(x) = [1 - (D ⊗ 1)(1 ⊗ delta(x))]^{-1} (C ⊗ 1), of shape (m J n) x n.
Matrix derive_model(const Colligation &c, const MatrixTuple &x);

/// Finite-set nc-model: values phi(x_i) and model vectors u(x_i).
struct ModelData
{
  int m = 0;
  std::vector<MatrixTuple> points;
  std::vector<Matrix> values;
  std::vector<Matrix> uvecs;
};

/// ModelData for c at the given points.
ModelData build_model(const Colligation &c, const std::vector<MatrixTuple> &points);

/// Max over same-level pairs (x_i, x_j) of
///   || 1 - phi(x_j)^* phi(x_i) - u(x_j)^* [1 ⊗ (1 - delta(x_j)^* delta(x_i))] u(x_i) ||.
/// Pairs on different levels are skipped.
double verify_model(const ModelData &md, const DeltaMatrix &delta);

/// Largest ||phi(x)|| over `trials` random members of the polyhedron at levels
/// 1..level_max (see sample_member).
double contractivity_sample(const Colligation &c, int trials, std::uint64_t seed,
                            int level_max);

}  // namespace ncreal

#endif  // NCREAL_REALIZATION_HPP
