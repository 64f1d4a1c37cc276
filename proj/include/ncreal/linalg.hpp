// SPDX-License-Identifier: Apache-2.0

#ifndef NCREAL_LINALG_HPP
#define NCREAL_LINALG_HPP

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace ncreal
{

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Kronecker product; the left factor indexes the outer (block) coordinate.
Matrix kron(const Matrix &a, const Matrix &b);

// Largest singular value. Throws InputError on non-finite entries.
double op_norm(const Matrix &m);

bool all_finite(const Matrix &m);

// Block-diagonal matrix a ⊕ b.
Matrix block_diag(const Matrix &a, const Matrix &b);

// Orthonormal basis (as columns) of the column span of m, using singular values above
// rel_tol * sigma_max (an all-zero matrix has rank 0).
Matrix orth(const Matrix &m, double rel_tol);

// Orthonormal basis of the orthogonal complement of the span of the orthonormal columns q
// inside C^dim.
Matrix orth_complement(const Matrix &q, Eigen::Index dim);

// Orthonormal basis of the null space of m (columns), same rank rule as orth().
Matrix null_space(const Matrix &m, double rel_tol);

// I.i.d. standard complex Gaussian entries (E|z|^2 = 1).
Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng);

// Column-stacked vectorization: col_1 ⊕ col_2 ⊕ ... ⊕ col_n.
Vector vec(const Matrix &m);

}  // namespace ncreal

#endif  // NCREAL_LINALG_HPP
