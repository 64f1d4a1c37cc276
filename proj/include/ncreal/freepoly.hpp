// SPDX-License-Identifier: Apache-2.0

///
/// \file freepoly.hpp
///
/// Free (non-commutative) polynomials in d variables and matrices of them.
///

#ifndef NCREAL_FREEPOLY_HPP
#define NCREAL_FREEPOLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "ncreal/linalg.hpp"

namespace ncreal
{

class MatrixTuple;

/// A word in the letters 1..d. The empty word is the unit.
///
/// Words are ordered graded-lexicographically: shorter words first, equal lengths compared
/// letter by letter. This is the only order used for serialization and enumeration.
struct Word
{
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  std::strong_ordering operator<=>(const Word &other) const;
  bool operator==(const Word &other) const = default;
};

/// Concatenation: (a * b) evaluates to x^a x^b.
Word operator*(const Word &a, const Word &b);

/// All words of length <= max_length over d letters, in graded-lex order.
std::vector<Word> words_up_to(int d, int max_length);

/// Coefficients with modulus at or below this are dropped.
inline constexpr double kCoeffZeroTol = 1e-14;

class FreePoly
{
public:
  using Terms = std::map<Word, Complex>;

  explicit FreePoly(int d);
  FreePoly(int d, Terms terms);

  static FreePoly constant(int d, Complex c);
  static FreePoly variable(int d, int r);
  static FreePoly monomial(int d, const Word &w, Complex c = 1.0);

  int dims() const { return d_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Maximum word length; -1 for the zero polynomial.
  int degree() const;

  /// Coefficient of w (zero if absent).
  Complex coeff(const Word &w) const;

  /// True when every term has degree exactly one.
  bool is_linear_homogeneous() const;

  FreePoly operator+(const FreePoly &q) const;
  FreePoly operator-(const FreePoly &q) const;
  FreePoly operator*(const FreePoly &q) const;
  FreePoly operator-() const;
  FreePoly scaled(Complex c) const;

  bool operator==(const FreePoly &q) const = default;

private:
  void check_same_dims(const FreePoly &q) const;
  void prune();

  int d_;
  Terms terms_;
};

inline FreePoly operator*(Complex c, const FreePoly &p) { return p.scaled(c); }

/// Evaluate p at the tuple x: sum of c_w x^w, with x^{empty} = identity.
Matrix poly_eval(const FreePoly &p, const MatrixTuple &x);

/// Evaluate a single word at x.
Matrix word_eval(const Word &w, const MatrixTuple &x);

/// An I-by-J matrix of free polynomials sharing the same number of variables.
class DeltaMatrix
{
public:
  DeltaMatrix(int rows, int cols, std::vector<FreePoly> entries);

  /// diag(x^1, ..., x^d).
  static DeltaMatrix diagonal_variables(int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dims() const { return entries_.front().dims(); }

  const FreePoly &operator()(int i, int j) const { return entries_[i * cols_ + j]; }
  const std::vector<FreePoly> &entries() const { return entries_; }

  bool is_linear_homogeneous() const;

  bool operator==(const DeltaMatrix &other) const = default;

private:
  int rows_;
  int cols_;
  std::vector<FreePoly> entries_;  // row-major
};

/// Block matrix whose (i, j) block of size n is poly_eval(delta(i, j), x).
Matrix delta_eval(const DeltaMatrix &delta, const MatrixTuple &x);

}  // namespace ncreal

#endif  // NCREAL_FREEPOLY_HPP
