// SPDX-License-Identifier: Apache-2.0

///
/// \file algebra.hpp
///
/// The unital algebra Alg(z) generated by a matrix tuple, the trace functional separating a
/// matrix w from it, and the similarity scaling that pushes z^{(n)} into the polyhedron while
/// blowing up w^{(n)}.
///

#ifndef NCREAL_ALGEBRA_HPP
#define NCREAL_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncreal/freepoly.hpp"
#include "ncreal/linalg.hpp"
#include "ncreal/mattuple.hpp"

namespace ncreal
{

class Colligation;

inline constexpr double kAlgebraRankTol = 1e-10;

/// Orthonormal (Frobenius) basis of Alg(z).
///
/// basis[j] comes from Gram-Schmidt on the evaluation of words[j]; the upper-triangular
/// coords matrix records word_eval(words[j], z) = sum_i coords(i, j) basis[i].
struct AlgebraBasis
{
  MatrixTuple generator;
  std::vector<Matrix> basis;
  std::vector<Word> words;
  Matrix coords;

  int dim() const { return static_cast<int>(basis.size()); }
  int level() const { return generator.level(); }
  /// Length of the longest generating word.
  int saturation_degree() const;
};

/// Enumerates words in graded-lex order, keeping those that add rank, and stops after the
/// first degree that adds nothing.
AlgebraBasis alg_basis(const MatrixTuple &z, double rank_tol = kAlgebraRankTol);

struct AlgMembership
{
  bool member = false;
  double distance = 0.0;        // Frobenius distance from w to Alg(z)
  std::optional<FreePoly> poly;  // p with p(z) = w, supported on the basis words
};

/// member <=> distance <= kAlgMembershipTol * (1 + ||w||_F).
inline constexpr double kAlgMembershipTol = 1e-8;

AlgMembership alg_membership(const AlgebraBasis &basis, const Matrix &w);

/// Trace functional separating w from Alg(z), and the subspace and scaling built from it.
struct SeparationCertificate
{
  Matrix w;
  Matrix K;  // tr(aK) = 0 on Alg(z), tr(wK) = 1
  Vector u;  // col_1(K) ⊕ ... ⊕ col_n(K)
  Vector v;  // e_1 ⊕ ... ⊕ e_n
  Matrix N;  // orthonormal basis of (Alg(z) ⊗ id) u, as columns
  Matrix s;  // alpha P_N + beta P_N^perp, beta = 1
  Matrix s_inv;
  double alpha_over_beta = 0.0;
  std::map<std::string, double> residuals;
};

/// Minimum-Frobenius-norm K with tr(aK) = 0 on the basis and tr(wK) = 1. Fills w, K, u, v.
/// Throws InfeasibleError when w belongs to the algebra.
SeparationCertificate separating_functional(const AlgebraBasis &basis, const Matrix &w);

/// Orthonormal basis of span{a^{(n)} u : a in basis}; also stores it in cert.N.
/// Throws InfeasibleError if v is not orthogonal to it, the span is not invariant, or
/// <w^{(n)} u, v> vanishes.
Matrix invariant_subspace(SeparationCertificate &cert, const AlgebraBasis &basis);

/// Membership margin and w-norm excess demanded of the scaling.
inline constexpr double kScalingMargin = 1e-6;
inline constexpr int kMaxScalingDoublings = 60;

/// Doubling search over alpha / beta = 2, 4, 8, ... for s = alpha P_N + P_N^perp with
///   1 - ||delta(s^{-1} z^{(n)} s)|| >= kScalingMargin and ||s^{-1} w^{(n)} s|| >= 1 + kScalingMargin.
/// Every condition, including the vanishing lower-left block of delta(s^{-1} z^{(n)} s) in the
/// N-splitting, is re-verified before returning.
SeparationCertificate scaling_construct(const DeltaMatrix &delta, const MatrixTuple &z,
                                        const Matrix &w);

/// Operator norms of the four blocks of m under the splitting (C^k ⊗ N) ⊕ (C^k ⊗ N^perp),
/// where the outer factor has row_blocks (resp. col_blocks) copies.
struct SplitNorms
{
  double upper_left = 0.0;
  double upper_right = 0.0;
  double lower_left = 0.0;
  double lower_right = 0.0;
};

SplitNorms split_norms(const Matrix &m, const Matrix &N, int row_blocks, int col_blocks);

/// Evaluate the realization at z and test phi(z) against Alg(z).
AlgMembership theorem_b1_check(const DeltaMatrix &delta, const Colligation &phi,
                               const MatrixTuple &z);

}  // namespace ncreal

#endif  // NCREAL_ALGEBRA_HPP
