// SPDX-License-Identifier: Apache-2.0

///
/// \file mattuple.hpp
///
/// Matrix tuples as nc points: direct sums, amplification, similarity, intertwiners and
/// membership in the polynomial polyhedron {x : ||delta(x)|| < 1}.
///

#ifndef NCREAL_MATTUPLE_HPP
#define NCREAL_MATTUPLE_HPP

#include <random>
#include <vector>

#include "ncreal/freepoly.hpp"
#include "ncreal/linalg.hpp"

namespace ncreal
{

/// d square matrices of a common size n (the level).
class MatrixTuple
{
public:
  explicit MatrixTuple(std::vector<Matrix> mats);

  /// The zero tuple at level n.
  static MatrixTuple zero(int d, int n);

  /// Level-1 tuple from scalars.
  static MatrixTuple scalars(const std::vector<Complex> &values);

  int dims() const { return static_cast<int>(mats_.size()); }
  int level() const { return static_cast<int>(mats_.front().rows()); }

  const Matrix &operator[](int r) const { return mats_[r]; }
  const std::vector<Matrix> &mats() const { return mats_; }

  MatrixTuple operator+(const MatrixTuple &other) const;
  MatrixTuple scaled(Complex c) const;

  /// Largest operator norm among the components.
  double max_norm() const;

private:
  std::vector<Matrix> mats_;
};

/// member <=> norm < 1 - kMembershipTol.
inline constexpr double kMembershipTol = 1e-10;

struct PolyhedronReport
{
  double norm = 0.0;
  bool member = false;
  double margin = 0.0;  // 1 - norm
};

PolyhedronReport membership(const DeltaMatrix &delta, const MatrixTuple &x,
                            double tol = kMembershipTol);

/// Throws DomainError unless x is a member.
void require_member(const DeltaMatrix &delta, const MatrixTuple &x,
                    double tol = kMembershipTol);

MatrixTuple direct_sum(const MatrixTuple &x, const MatrixTuple &y);

/// Direct sum of a non-empty list of tuples.
MatrixTuple direct_sum(const std::vector<MatrixTuple> &xs);

/// k-fold direct sum x^{(k)}.
MatrixTuple amplify(const MatrixTuple &x, int k);

/// Reciprocal condition numbers below this are rejected by similarity().
inline constexpr double kMinReciprocalCondition = 1e-12;

struct SimilarityOptions
{
  // Skip the condition-number cap. Used by the scaling constructions, whose s is
  // deliberately ill-conditioned.
  bool allow_ill_conditioned = false;
};

/// Componentwise s^{-1} x^r s.
MatrixTuple similarity(const MatrixTuple &x, const Matrix &s, SimilarityOptions opts = {});

/// As similarity(), with a caller-supplied inverse.
MatrixTuple similarity(const MatrixTuple &x, const Matrix &s, const Matrix &s_inv);

/// max_r ||S x^r - y^r S||.
double intertwine_check(const MatrixTuple &x, const MatrixTuple &y, const Matrix &S);

/// Tuple of i.i.d. standard complex Gaussian entries.
MatrixTuple random_gaussian_tuple(int d, int n, std::mt19937_64 &rng);

/// Draw a random member of the polyhedron at level n.
///
/// A Gaussian direction g is scaled down until r g is a member (rejection). The point is
/// then moved along the ray toward the boundary crossing t_b, to r + rho (t_b - r) with
/// rho = 0.99 sqrt(U), so that samples cover the interior and the near-boundary region.
/// For degree-one homogeneous delta, t_b = 1 / ||delta(g)|| exactly.
/// Throws SamplerExhausted after max_attempts rejections.
MatrixTuple sample_member(const DeltaMatrix &delta, int n, std::mt19937_64 &rng,
                          int max_attempts = 10000);

}  // namespace ncreal

#endif  // NCREAL_MATTUPLE_HPP
