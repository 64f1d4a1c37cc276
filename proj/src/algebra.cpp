// SPDX-License-Identifier: Apache-2.0

#include "ncreal/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncreal/errors.hpp"
#include "ncreal/realization.hpp"

namespace ncreal
{

namespace
{

Complex frob_inner(const Matrix &a, const Matrix &b)
{
  return (a.conjugate().cwiseProduct(b)).sum();
}

// Residual of m after projecting out the orthonormal family q (two passes), with the
// accumulated projection coefficients.
Matrix project_out(const std::vector<Matrix> &q, const Matrix &m, std::vector<Complex> &coeffs)
{
  coeffs.assign(q.size(), 0.0);
  Matrix r = m;
  for (int pass = 0; pass < 2; pass++)
  {
    for (std::size_t i = 0; i < q.size(); i++)
    {
      const Complex c = frob_inner(q[i], r);
      coeffs[i] += c;
      r -= c * q[i];
    }
  }
  return r;
}

Matrix amplification(const Matrix &a, int k)
{
  return kron(Matrix::Identity(k, k), a);
}

}  // namespace

int AlgebraBasis::saturation_degree() const
{
  int out = 0;
  for (const auto &w : words)
  {
    out = std::max(out, static_cast<int>(w.length()));
  }
  return out;
}

AlgebraBasis alg_basis(const MatrixTuple &z, double rank_tol)
{
  const int n = z.level();
  const int d = z.dims();
  std::vector<Matrix> q;
  std::vector<Word> words;
  std::vector<Matrix> evals;
  std::vector<std::vector<Complex>> columns;

  auto try_add = [&](const Word &w, const Matrix &m) {
    std::vector<Complex> c;
    Matrix r = project_out(q, m, c);
    const double rn = r.norm();
    if (rn <= rank_tol * m.norm() || rn == 0.0)
    {
      return false;
    }
    q.push_back(r / rn);
    c.push_back(rn);
    columns.push_back(std::move(c));
    words.push_back(w);
    evals.push_back(m);
    return true;
  };

  try_add(Word{}, Matrix::Identity(n, n));
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty() && static_cast<int>(q.size()) < n * n)
  {
    // Left-multiplying the newest accepted words by each letter reaches every word of the
    // next degree that can add rank.
    std::vector<std::pair<Word, Matrix>> candidates;
    for (std::size_t idx : frontier)
    {
      for (int r = 1; r <= d; r++)
      {
        candidates.emplace_back(Word({r}) * words[idx], z[r - 1] * evals[idx]);
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<std::size_t> next;
    for (const auto &[w, m] : candidates)
    {
      if (static_cast<int>(q.size()) == n * n)
      {
        break;
      }
      if (try_add(w, m))
      {
        next.push_back(words.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  const auto dim = static_cast<Eigen::Index>(q.size());
  Matrix coords = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; j++)
  {
    for (Eigen::Index i = 0; i <= j; i++)
    {
      coords(i, j) = columns[j][i];
    }
  }
  return AlgebraBasis{z, std::move(q), std::move(words), std::move(coords)};
}

AlgMembership alg_membership(const AlgebraBasis &basis, const Matrix &w)
{
  const int n = basis.level();
  if (w.rows() != n || w.cols() != n)
  {
    throw InputError("alg_membership: w must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  std::vector<Complex> c;
  const Matrix r = project_out(basis.basis, w, c);
  AlgMembership out;
  out.distance = r.norm();
  out.member = out.distance <= kAlgMembershipTol * (1.0 + w.norm());
  if (out.member)
  {
    Vector b = Eigen::Map<Vector>(c.data(), static_cast<Eigen::Index>(c.size()));
    Vector x = basis.coords.triangularView<Eigen::Upper>().solve(b);
    FreePoly::Terms terms;
    for (std::size_t j = 0; j < basis.words.size(); j++)
    {
      terms[basis.words[j]] = x(static_cast<Eigen::Index>(j));
    }
    out.poly = FreePoly(basis.generator.dims(), std::move(terms));
  }
  return out;
}

SeparationCertificate separating_functional(const AlgebraBasis &basis, const Matrix &w)
{
  const auto mem = alg_membership(basis, w);
  if (mem.member)
  {
    throw InfeasibleError("inseparable: w in algebra (distance " +
                          std::to_string(mem.distance) + ")");
  }
  const int n = basis.level();
  const auto rows = static_cast<Eigen::Index>(basis.basis.size()) + 1;
  // tr(aK) = sum_{ij} a_ij K_ji, so the row for a is vec(a^T) against vec(K).
  Matrix system(rows, n * n);
  for (Eigen::Index i = 0; i + 1 < rows; i++)
  {
    system.row(i) = vec(basis.basis[i].transpose()).transpose();
  }
  system.row(rows - 1) = vec(w.transpose()).transpose();
  Vector rhs = Vector::Zero(rows);
  rhs(rows - 1) = 1.0;
  Vector k = system.completeOrthogonalDecomposition().solve(rhs);

  SeparationCertificate cert;
  cert.w = w;
  cert.K = Eigen::Map<Matrix>(k.data(), n, n);
  cert.u = vec(cert.K);
  cert.v = vec(Matrix::Identity(n, n));

  double on_algebra = 0.0;
  for (const auto &a : basis.basis)
  {
    on_algebra = std::max(on_algebra, std::abs((a * cert.K).trace()));
  }
  cert.residuals["trace_on_algebra"] = on_algebra;
  cert.residuals["trace_w_minus_one"] = std::abs((w * cert.K).trace() - 1.0);
  return cert;
}

Matrix invariant_subspace(SeparationCertificate &cert, const AlgebraBasis &basis)
{
  const int n = basis.level();
  Matrix span(n * n, basis.dim());
  for (int j = 0; j < basis.dim(); j++)
  {
    span.col(j) = amplification(basis.basis[j], n) * cert.u;
  }
  Matrix N = orth(span, kAlgebraRankTol);
  if (N.cols() == 0)
  {
    throw InfeasibleError("invariant_subspace: (Alg(z) ⊗ id) u is trivial");
  }
  const Matrix P = N * N.adjoint();
  const Matrix Pperp = Matrix::Identity(n * n, n * n) - P;

  double invariance = 0.0;
  for (const auto &zr : basis.generator.mats())
  {
    invariance = std::max(invariance, op_norm(Pperp * amplification(zr, n) * P));
  }
  const Matrix wn = amplification(cert.w, n);
  const double v_perp = (N.adjoint() * cert.v).norm();
  const double pairing = std::abs(cert.v.dot(wn * cert.u));

  cert.residuals["v_perp_N"] = v_perp;
  cert.residuals["invariance"] = invariance;
  cert.residuals["w_pairing"] = pairing;
  cert.residuals["w_noninvariance"] = op_norm(Pperp * wn * P);

  if (v_perp > 1e-8 || invariance > 1e-8 || pairing < 0.5)
  {
    throw InfeasibleError("invariant_subspace: inconsistent certificate (v_perp " +
                          std::to_string(v_perp) + ", invariance " +
                          std::to_string(invariance) + ", pairing " + std::to_string(pairing) +
                          ")");
  }
  cert.N = N;
  return N;
}

SplitNorms split_norms(const Matrix &m, const Matrix &N, int row_blocks, int col_blocks)
{
  const auto dim = N.rows();
  const Matrix P = N * N.adjoint();
  const Matrix Q = Matrix::Identity(dim, dim) - P;
  const Matrix Ir = Matrix::Identity(row_blocks, row_blocks);
  const Matrix Ic = Matrix::Identity(col_blocks, col_blocks);
  const Matrix Pr = kron(Ir, P), Qr = kron(Ir, Q), Pc = kron(Ic, P), Qc = kron(Ic, Q);
  return SplitNorms{op_norm(Pr * m * Pc), op_norm(Pr * m * Qc), op_norm(Qr * m * Pc),
                    op_norm(Qr * m * Qc)};
}

SeparationCertificate scaling_construct(const DeltaMatrix &delta, const MatrixTuple &z,
                                        const Matrix &w)
{
  const auto z_report = membership(delta, z);
  if (!z_report.member)
  {
    throw DomainError("scaling_construct: z outside polyhedron (||delta(z)|| = " +
                      std::to_string(z_report.norm) + ")");
  }
  const int n = z.level();
  if (w.rows() != n || w.cols() != n)
  {
    throw InputError("scaling_construct: w must match the level of z");
  }
  const AlgebraBasis basis = alg_basis(z);
  SeparationCertificate cert = separating_functional(basis, w);
  invariant_subspace(cert, basis);

  const Eigen::Index dim = n * n;
  const Matrix P = cert.N * cert.N.adjoint();
  const Matrix Q = Matrix::Identity(dim, dim) - P;
  const MatrixTuple zn = amplify(z, n);
  const Matrix wn = amplification(w, n);

  double t = 1.0;
  for (int k = 1; k <= kMaxScalingDoublings; k++)
  {
    t *= 2.0;
    const Matrix s = t * P + Q;
    const Matrix s_inv = P / t + Q;
    const MatrixTuple scaled = similarity(zn, s, s_inv);
    const Matrix dz = delta_eval(delta, scaled);
    const double dnorm = op_norm(dz);
    const double wnorm = op_norm(s_inv * wn * s);
    if (1.0 - dnorm <= kScalingMargin || wnorm <= 1.0 + kScalingMargin)
    {
      continue;
    }
    const SplitNorms blocks = split_norms(dz, cert.N, delta.rows(), delta.cols());
    cert.s = s;
    cert.s_inv = s_inv;
    cert.alpha_over_beta = t;
    cert.residuals["scaled_delta_norm"] = dnorm;
    cert.residuals["membership_margin"] = 1.0 - dnorm;
    cert.residuals["scaled_w_norm"] = wnorm;
    cert.residuals["lower_left_block"] = blocks.lower_left;
    cert.residuals["upper_right_block"] = blocks.upper_right;
    cert.residuals["inverse_residual"] = op_norm(s * s_inv - Matrix::Identity(dim, dim));

    // Re-verify from scratch through the public similarity path.
    const auto check = membership(delta, similarity(zn, s, s_inv), kScalingMargin);
    if (!check.member || blocks.lower_left > 1e-10)
    {
      throw InfeasibleError("scaling_construct: verification failed at ratio " +
                            std::to_string(t));
    }
    return cert;
  }
  throw InfeasibleError("scaling_construct: no ratio up to 2^" +
                        std::to_string(kMaxScalingDoublings) +
                        " separates (degenerate pairing or margin)");
}

AlgMembership theorem_b1_check(const DeltaMatrix &delta, const Colligation &phi,
                               const MatrixTuple &z)
{
  require_member(delta, z);
  return alg_membership(alg_basis(z), eval_realization(phi, z));
}

}  // namespace ncreal
