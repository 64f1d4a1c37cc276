// SPDX-License-Identifier: Apache-2.0

///
/// \file synthesis.hpp
///
/// Model-to-realization synthesis (lurking isometry) and the finite interpolation
/// ingredients: polynomial fitting at a point, the degree-bounded vanishing ideal, and a
/// sampled check of the sup-norm condition over its zero set.
///

#ifndef NCREAL_SYNTHESIS_HPP
#define NCREAL_SYNTHESIS_HPP

#include <cstdint>
#include <vector>

#include "ncreal/errors.hpp"
#include "ncreal/freepoly.hpp"
#include "ncreal/mattuple.hpp"
#include "ncreal/realization.hpp"

namespace ncreal
{

struct LurkingOptions
{
  double gram_tol = 1e-8;  // relative to max(1, ||Gram||)
  double rank_tol = 1e-9;
  int max_model_dim = 32;
};

/// Build an isometric colligation V with (V ⊗ 1)[1; (1 ⊗ delta(x)) u(x)] = [phi(x); u(x)] at
/// every point of the model.
///
/// The level-n columns are split along the level coordinate into vectors g in C ⊕ M ⊗ C^I
/// and h in C ⊕ M ⊗ C^J. An nc-model makes the two families isometric (equal Gram
/// matrices), so g -> h defines a partial isometry, which is completed to V by mapping the
/// orthogonal complement of span{g} into the complement of span{h}. If the domain
/// complement is larger, m is enlarged (zero rows) until it fits or max_model_dim is hit.
///
/// Throws InfeasibleError on Gram mismatch or padding overflow.
Colligation lurking_isometry(const ModelData &md, const DeltaMatrix &delta,
                             LurkingOptions opts = {});

struct InterpolationProblem
{
  DeltaMatrix delta;
  std::vector<MatrixTuple> nodes;
  std::vector<Matrix> targets;  // optional; empty or one per node
  int degree_bound = 0;
};

/// derive_model at the nodes followed by lurking_isometry. An empty node list returns the
/// source unchanged. Throws DomainError for nodes outside the polyhedron.
Colligation interpolate_finite(const InterpolationProblem &prob, const Colligation &source,
                               LurkingOptions opts = {});

/// ||c(x_i) - values_i||, node by node.
std::vector<double> agreement_residuals(const Colligation &c,
                                        const std::vector<MatrixTuple> &nodes,
                                        const std::vector<Matrix> &values);

/// Raised by fit_polynomial. `saturated` means the words up to the bound already span
/// Alg(lambda), so raising the bound cannot help: w is not in the algebra.
class FitInfeasible : public InfeasibleError
{
public:
  FitInfeasible(const std::string &what, bool saturated, double residual)
    : InfeasibleError(what), saturated(saturated), residual(residual)
  {
  }

  bool saturated;
  double residual;
};

inline constexpr double kFitTol = 1e-8;

/// Minimum-norm least-squares p over all words of length <= degree_bound with p(lambda) = w,
/// accepted when ||p(lambda) - w||_F <= kFitTol (1 + ||w||_F).
FreePoly fit_polynomial(const MatrixTuple &lambda, const Matrix &w, int degree_bound);

/// Orthonormal basis (in coefficient space, graded-lex word indexing) of
/// {q : deg q <= degree_bound, q(lambda) = 0}.
struct IdealBasis
{
  int degree_bound = 0;
  std::vector<Word> words;
  std::vector<FreePoly> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

IdealBasis ideal_basis(const MatrixTuple &lambda, int degree_bound);

/// Max over q in the ideal basis of ||q(x)||.
double ideal_residual(const IdealBasis &ideal, const MatrixTuple &x);

inline constexpr double kIdealTol = 1e-8;

struct ConditionIIReport
{
  double max_norm = 0.0;
  std::vector<MatrixTuple> points;  // accepted samples, lambda first
  int rejected = 0;
};

/// One-sided sampled check of sup{||p(x)|| : x in V_lambda ∩ polyhedron} <= 1. It can refute
/// the condition but never certify it.
///
/// Candidates: lambda and its amplifications; compressions of lambda^{(k)} to random cyclic
/// invariant subspaces and to their orthogonal complements; near-identity similarities and
/// direct sums of those; random members of the polyhedron. A candidate is kept when it is a
/// member and every ideal basis element vanishes on it to kIdealTol.
/// Throws SamplerExhausted if nothing is kept.
ConditionIIReport check_condition_ii(const FreePoly &p, const DeltaMatrix &delta,
                                     const MatrixTuple &lambda, const IdealBasis &ideal,
                                     int samples, std::uint64_t seed);

}  // namespace ncreal

#endif  // NCREAL_SYNTHESIS_HPP
