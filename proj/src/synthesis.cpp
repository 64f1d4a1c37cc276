// SPDX-License-Identifier: Apache-2.0

#include "ncreal/synthesis.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "ncreal/algebra.hpp"

namespace ncreal
{

namespace
{

// Split the columns of a level-n block [top; bottom] (top n x n, bottom (k n) x n) along the
// level coordinate: column k, level index l gives (top(l, k); bottom(a n + l, k) for a < k).
void append_split_columns(const Matrix &top, const Matrix &bottom, int n, Matrix &out,
                          Eigen::Index &col)
{
  const Eigen::Index outer = bottom.rows() / n;
  for (int k = 0; k < n; k++)
  {
    for (int l = 0; l < n; l++)
    {
      out(0, col) = top(l, k);
      for (Eigen::Index a = 0; a < outer; a++)
      {
        out(1 + a, col) = bottom(a * n + l, k);
      }
      col++;
    }
  }
}

}  // namespace

Colligation lurking_isometry(const ModelData &md, const DeltaMatrix &delta, LurkingOptions opts)
{
  const std::size_t count = md.points.size();
  if (md.values.size() != count || md.uvecs.size() != count)
  {
    throw InputError("lurking_isometry: points, values and uvecs differ in length");
  }
  const int m = md.m;
  const Eigen::Index dom = 1 + static_cast<Eigen::Index>(m) * delta.rows();
  const Eigen::Index cod = 1 + static_cast<Eigen::Index>(m) * delta.cols();

  Eigen::Index total = 0;
  for (const auto &x : md.points)
  {
    total += static_cast<Eigen::Index>(x.level()) * x.level();
  }
  Matrix G(dom, total);
  Matrix H(cod, total);
  Eigen::Index gcol = 0, hcol = 0;
  for (std::size_t i = 0; i < count; i++)
  {
    const int n = md.points[i].level();
    const Matrix &u = md.uvecs[i];
    if (md.values[i].rows() != n || md.values[i].cols() != n ||
        u.rows() != (cod - 1) * n || u.cols() != n)
    {
      throw InputError("lurking_isometry: shapes of point " + std::to_string(i) +
                       " are inconsistent with m, I, J");
    }
    const Matrix lifted = kron(Matrix::Identity(m, m), delta_eval(delta, md.points[i]));
    append_split_columns(Matrix::Identity(n, n), lifted * u, n, G, gcol);
    append_split_columns(md.values[i], u, n, H, hcol);
  }

  const Matrix gram_g = G.adjoint() * G;
  const double mismatch = total > 0 ? op_norm(gram_g - H.adjoint() * H) : 0.0;
  const double scale = total > 0 ? std::max(1.0, op_norm(gram_g)) : 1.0;
  if (mismatch > opts.gram_tol * scale)
  {
    throw InfeasibleError("lurking_isometry: Gram mismatch " + std::to_string(mismatch) +
                          " (input is not an nc-model)");
  }

  // Partial isometry on span{g}: with G = U S W^*, the image of U_r is H W_r S_r^{-1}.
  Matrix Ur(dom, 0), Yr(cod, 0);
  if (total > 0)
  {
    Eigen::JacobiSVD<Matrix> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sigma = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > opts.rank_tol * sigma(0))
    {
      rank++;
    }
    Ur = svd.matrixU().leftCols(rank);
    Yr = H * svd.matrixV().leftCols(rank) *
         sigma.head(rank).cwiseInverse().asDiagonal();
    if (rank > 0)
    {
      // Snap to the nearest orthonormal family.
      Eigen::JacobiSVD<Matrix> polar(Yr, Eigen::ComputeThinU | Eigen::ComputeThinV);
      Yr = polar.matrixU() * polar.matrixV().adjoint();
    }
  }

  // Pad the model dimension while the domain complement is larger than the codomain one.
  int m_out = m;
  const Eigen::Index rank = Ur.cols();
  auto dom_of = [&](int mm) { return 1 + static_cast<Eigen::Index>(mm) * delta.rows(); };
  auto cod_of = [&](int mm) { return 1 + static_cast<Eigen::Index>(mm) * delta.cols(); };
  while (dom_of(m_out) - rank > cod_of(m_out) - rank)
  {
    if (m_out >= opts.max_model_dim)
    {
      throw InfeasibleError("lurking_isometry: padding overflow (no isometric extension with "
                            "model dimension <= " +
                            std::to_string(opts.max_model_dim) + ")");
    }
    m_out++;
  }
  const Eigen::Index dom_out = dom_of(m_out), cod_out = cod_of(m_out);
  Matrix Up = Matrix::Zero(dom_out, rank);
  Up.topRows(dom) = Ur;
  Matrix Yp = Matrix::Zero(cod_out, rank);
  Yp.topRows(cod) = Yr;

  const Matrix Xc = orth_complement(Up, dom_out);
  const Matrix Yc = orth_complement(Yp, cod_out);
  Matrix V = Yp * Up.adjoint() + Yc.leftCols(Xc.cols()) * Xc.adjoint();
  return Colligation(delta, m_out, std::move(V));
}

Colligation interpolate_finite(const InterpolationProblem &prob, const Colligation &source,
                               LurkingOptions opts)
{
  if (!(prob.delta == source.delta()))
  {
    throw InputError("interpolate_finite: problem and source use different delta");
  }
  if (!prob.targets.empty() && prob.targets.size() != prob.nodes.size())
  {
    throw InputError("interpolate_finite: need one target per node");
  }
  for (std::size_t i = 0; i < prob.nodes.size(); i++)
  {
    const auto &x = prob.nodes[i];
    const auto report = membership(prob.delta, x);
    if (!report.member)
    {
      throw DomainError("outside polyhedron: node " + std::to_string(i) +
                        " has ||delta(x)|| = " + std::to_string(report.norm));
    }
    if (!prob.targets.empty() &&
        (prob.targets[i].rows() != x.level() || prob.targets[i].cols() != x.level()))
    {
      throw InputError("interpolate_finite: target " + std::to_string(i) +
                       " does not match the node level");
    }
  }
  if (prob.nodes.empty())
  {
    return source;
  }
  return lurking_isometry(build_model(source, prob.nodes), prob.delta, opts);
}

std::vector<double> agreement_residuals(const Colligation &c,
                                        const std::vector<MatrixTuple> &nodes,
                                        const std::vector<Matrix> &values)
{
  std::vector<double> out;
  for (std::size_t i = 0; i < nodes.size(); i++)
  {
    out.push_back(op_norm(eval_realization(c, nodes[i]) - values.at(i)));
  }
  return out;
}

namespace
{

Matrix word_matrix(const MatrixTuple &lambda, const std::vector<Word> &words)
{
  const int n = lambda.level();
  Matrix E(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(words.size()));
  for (std::size_t j = 0; j < words.size(); j++)
  {
    E.col(static_cast<Eigen::Index>(j)) = vec(word_eval(words[j], lambda));
  }
  return E;
}

FreePoly poly_from_coeffs(int d, const std::vector<Word> &words, const Vector &c)
{
  FreePoly::Terms terms;
  for (std::size_t j = 0; j < words.size(); j++)
  {
    terms[words[j]] = c(static_cast<Eigen::Index>(j));
  }
  return FreePoly(d, std::move(terms));
}

}  // namespace

FreePoly fit_polynomial(const MatrixTuple &lambda, const Matrix &w, int degree_bound)
{
  const int n = lambda.level();
  if (w.rows() != n || w.cols() != n)
  {
    throw InputError("fit_polynomial: w must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  if (degree_bound < 0)
  {
    throw InputError("fit_polynomial: degree bound must be >= 0");
  }
  const auto words = words_up_to(lambda.dims(), degree_bound);
  const Matrix E = word_matrix(lambda, words);
  Eigen::JacobiSVD<Matrix> svd(E, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kAlgebraRankTol);
  const Vector c = svd.solve(vec(w));
  FreePoly p = poly_from_coeffs(lambda.dims(), words, c);

  const double residual = (poly_eval(p, lambda) - w).norm();
  if (residual > kFitTol * (1.0 + w.norm()))
  {
    const bool saturated = alg_basis(lambda).saturation_degree() <= degree_bound;
    throw FitInfeasible(saturated ? "fit infeasible: w not in Alg(lambda) (residual " +
                                        std::to_string(residual) + ")"
                                  : "fit infeasible at degree bound " +
                                        std::to_string(degree_bound) + "; raise the bound",
                        saturated, residual);
  }
  return p;
}

IdealBasis ideal_basis(const MatrixTuple &lambda, int degree_bound)
{
  if (degree_bound < 0)
  {
    throw InputError("ideal_basis: degree bound must be >= 0");
  }
  IdealBasis out;
  out.degree_bound = degree_bound;
  out.words = words_up_to(lambda.dims(), degree_bound);
  const Matrix null = null_space(word_matrix(lambda, out.words), kAlgebraRankTol);
  for (Eigen::Index k = 0; k < null.cols(); k++)
  {
    out.basis.push_back(poly_from_coeffs(lambda.dims(), out.words, null.col(k)));
  }
  return out;
}

double ideal_residual(const IdealBasis &ideal, const MatrixTuple &x)
{
  double out = 0.0;
  for (const auto &q : ideal.basis)
  {
    out = std::max(out, op_norm(poly_eval(q, x)));
  }
  return out;
}

namespace
{

MatrixTuple compress(const MatrixTuple &x, const Matrix &Q)
{
  std::vector<Matrix> mats;
  for (const auto &m : x.mats())
  {
    mats.push_back(Q.adjoint() * m * Q);
  }
  return MatrixTuple(std::move(mats));
}

}  // namespace

ConditionIIReport check_condition_ii(const FreePoly &p, const DeltaMatrix &delta,
                                     const MatrixTuple &lambda, const IdealBasis &ideal,
                                     int samples, std::uint64_t seed)
{
  if (samples < 1)
  {
    throw InputError("check_condition_ii: samples must be >= 1");
  }
  if (p.dims() != lambda.dims() || delta.dims() != lambda.dims())
  {
    throw InputError("check_condition_ii: variable counts disagree");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const AlgebraBasis alg = alg_basis(lambda);
  const int n = lambda.level();

  ConditionIIReport report;
  auto consider = [&](const MatrixTuple &x) {
    if (!membership(delta, x).member || ideal_residual(ideal, x) > kIdealTol)
    {
      report.rejected++;
      return;
    }
    report.max_norm = std::max(report.max_norm, op_norm(poly_eval(p, x)));
    report.points.push_back(x);
  };

  // Compression of lambda^{(k)} to a random cyclic invariant subspace, or to its complement.
  auto compression = [&](bool complement) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const MatrixTuple lk = amplify(lambda, k);
    const Vector v = random_matrix(static_cast<Eigen::Index>(k) * n, 1, rng);
    Matrix span(static_cast<Eigen::Index>(k) * n, alg.dim());
    for (int j = 0; j < alg.dim(); j++)
    {
      span.col(j) = kron(Matrix::Identity(k, k), alg.basis[j]) * v;
    }
    Matrix Q = orth(span, kAlgebraRankTol);
    if (complement)
    {
      Q = orth_complement(Q, Q.rows());
    }
    return Q.cols() > 0 ? std::optional<MatrixTuple>(compress(lk, Q)) : std::nullopt;
  };

  consider(lambda);
  for (int t = 1; t < samples; t++)
  {
    std::optional<MatrixTuple> x;
    switch (t % 6)
    {
      case 1:
        x = amplify(lambda, 2 + static_cast<int>(rng() % 2));
        break;
      case 2:
        x = compression(false);
        break;
      case 3:
        x = compression(true);
        break;
      case 4:
      {
        if (auto base = compression(uniform(rng) < 0.5))
        {
          const auto level = base->level();
          const Matrix s = Matrix::Identity(level, level) +
                           0.1 * uniform(rng) * random_matrix(level, level, rng);
          try
          {
            x = similarity(*base, s);
          }
          catch (const SingularError &)
          {
          }
        }
        break;
      }
      case 5:
      {
        auto a = compression(false);
        auto b = compression(true);
        if (a && b)
        {
          x = direct_sum(*a, *b);
        }
        else
        {
          x = a ? a : b;
        }
        break;
      }
      default:
      {
        const int level = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        try
        {
          x = sample_member(delta, level, rng, 100);
        }
        catch (const SamplerExhausted &)
        {
        }
        break;
      }
    }
    if (x)
    {
      consider(*x);
    }
    else
    {
      report.rejected++;
    }
  }
  if (report.points.empty())
  {
    throw SamplerExhausted("check_condition_ii: sampler produced no valid points");
  }
  return report;
}

}  // namespace ncreal
