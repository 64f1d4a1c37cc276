// SPDX-License-Identifier: Apache-2.0

#include "ncreal/freepoly.hpp"

#include <algorithm>
#include <string>

#include "ncreal/errors.hpp"
#include "ncreal/mattuple.hpp"

namespace ncreal
{

std::strong_ordering Word::operator<=>(const Word &other) const
{
  if (auto c = letters.size() <=> other.letters.size(); c != 0)
  {
    return c;
  }
  return std::lexicographical_compare_three_way(letters.begin(), letters.end(),
                                                other.letters.begin(), other.letters.end());
}

Word operator*(const Word &a, const Word &b)
{
  std::vector<int> l = a.letters;
  l.insert(l.end(), b.letters.begin(), b.letters.end());
  return Word(std::move(l));
}

std::vector<Word> words_up_to(int d, int max_length)
{
  std::vector<Word> out;
  if (max_length < 0)
  {
    return out;
  }
  out.emplace_back();
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; len++)
  {
    const std::size_t level_end = out.size();
    // Appending letters to the previous level in lex order keeps the result sorted.
    for (std::size_t i = level_begin; i < level_end; i++)
    {
      for (int r = 1; r <= d; r++)
      {
        Word w = out[i];
        w.letters.push_back(r);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

FreePoly::FreePoly(int d) : d_(d)
{
  if (d < 1)
  {
    throw InputError("FreePoly: number of variables must be >= 1");
  }
}

FreePoly::FreePoly(int d, Terms terms) : FreePoly(d)
{
  for (const auto &[w, c] : terms)
  {
    for (int r : w.letters)
    {
      if (r < 1 || r > d)
      {
        throw InputError("FreePoly: letter " + std::to_string(r) + " outside 1.." +
                         std::to_string(d));
      }
    }
  }
  terms_ = std::move(terms);
  prune();
}

FreePoly FreePoly::constant(int d, Complex c)
{
  return FreePoly(d, {{Word{}, c}});
}

FreePoly FreePoly::variable(int d, int r)
{
  return FreePoly(d, {{Word({r}), 1.0}});
}

FreePoly FreePoly::monomial(int d, const Word &w, Complex c)
{
  return FreePoly(d, {{w, c}});
}

int FreePoly::degree() const
{
  if (terms_.empty())
  {
    return -1;
  }
  // Graded order: the last key has maximal length.
  return static_cast<int>(terms_.rbegin()->first.length());
}

Complex FreePoly::coeff(const Word &w) const
{
  auto it = terms_.find(w);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

bool FreePoly::is_linear_homogeneous() const
{
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto &t) { return t.first.length() == 1; });
}

void FreePoly::check_same_dims(const FreePoly &q) const
{
  if (q.d_ != d_)
  {
    throw InputError("FreePoly: variable count mismatch (" + std::to_string(d_) + " vs " +
                     std::to_string(q.d_) + ")");
  }
}

void FreePoly::prune()
{
  std::erase_if(terms_, [](const auto &t) { return std::abs(t.second) <= kCoeffZeroTol; });
}

FreePoly FreePoly::operator+(const FreePoly &q) const
{
  check_same_dims(q);
  FreePoly out = *this;
  for (const auto &[w, c] : q.terms_)
  {
    out.terms_[w] += c;
  }
  out.prune();
  return out;
}

FreePoly FreePoly::operator-(const FreePoly &q) const
{
  return *this + (-q);
}

FreePoly FreePoly::operator-() const
{
  return scaled(-1.0);
}

FreePoly FreePoly::operator*(const FreePoly &q) const
{
  check_same_dims(q);
  FreePoly out(d_);
  for (const auto &[wa, ca] : terms_)
  {
    for (const auto &[wb, cb] : q.terms_)
    {
      out.terms_[wa * wb] += ca * cb;
    }
  }
  out.prune();
  return out;
}

FreePoly FreePoly::scaled(Complex c) const
{
  FreePoly out = *this;
  for (auto &t : out.terms_)
  {
    t.second *= c;
  }
  out.prune();
  return out;
}

namespace
{

constexpr std::size_t kMemoizeAbove = 32;

void check_tuple(int d, const MatrixTuple &x)
{
  if (x.dims() != d)
  {
    throw InputError("evaluation: polynomial has " + std::to_string(d) +
                     " variables but tuple has " + std::to_string(x.dims()));
  }
}

Matrix word_product(const Word &w, const MatrixTuple &x)
{
  const int n = x.level();
  if (w.empty())
  {
    return Matrix::Identity(n, n);
  }
  Matrix out = x[w.letters[0] - 1];
  for (std::size_t k = 1; k < w.letters.size(); k++)
  {
    out = out * x[w.letters[k] - 1];
  }
  return out;
}

// Evaluations of word prefixes, filled on demand.
class PrefixCache
{
public:
  explicit PrefixCache(const MatrixTuple &x) : x_(x) {}

  const Matrix &get(const Word &w)
  {
    if (auto it = cache_.find(w); it != cache_.end())
    {
      return it->second;
    }
    Matrix value;
    if (w.empty())
    {
      value = Matrix::Identity(x_.level(), x_.level());
    }
    else
    {
      Word prefix(std::vector<int>(w.letters.begin(), w.letters.end() - 1));
      value = get(prefix) * x_[w.letters.back() - 1];
    }
    return cache_.emplace(w, std::move(value)).first->second;
  }

private:
  const MatrixTuple &x_;
  std::map<Word, Matrix> cache_;
};

}  // namespace

Matrix word_eval(const Word &w, const MatrixTuple &x)
{
  for (int r : w.letters)
  {
    if (r < 1 || r > x.dims())
    {
      throw InputError("word_eval: letter out of range");
    }
  }
  return word_product(w, x);
}

Matrix poly_eval(const FreePoly &p, const MatrixTuple &x)
{
  check_tuple(p.dims(), x);
  const int n = x.level();
  Matrix out = Matrix::Zero(n, n);
  if (p.terms().size() > kMemoizeAbove)
  {
    PrefixCache cache(x);
    for (const auto &[w, c] : p.terms())
    {
      out += c * cache.get(w);
    }
  }
  else
  {
    for (const auto &[w, c] : p.terms())
    {
      out += c * word_product(w, x);
    }
  }
  return out;
}

DeltaMatrix::DeltaMatrix(int rows, int cols, std::vector<FreePoly> entries)
  : rows_(rows), cols_(cols), entries_(std::move(entries))
{
  if (rows < 1 || cols < 1)
  {
    throw InputError("DeltaMatrix: I and J must be >= 1");
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
  {
    throw InputError("DeltaMatrix: expected " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(entries_.size()));
  }
  const int d = entries_.front().dims();
  for (const auto &e : entries_)
  {
    if (e.dims() != d)
    {
      throw InputError("DeltaMatrix: entries disagree on the number of variables");
    }
  }
}

DeltaMatrix DeltaMatrix::diagonal_variables(int d)
{
  std::vector<FreePoly> entries;
  for (int i = 0; i < d; i++)
  {
    for (int j = 0; j < d; j++)
    {
      entries.push_back(i == j ? FreePoly::variable(d, i + 1) : FreePoly(d));
    }
  }
  return DeltaMatrix(d, d, std::move(entries));
}

bool DeltaMatrix::is_linear_homogeneous() const
{
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FreePoly &p) { return p.is_linear_homogeneous(); });
}

Matrix delta_eval(const DeltaMatrix &delta, const MatrixTuple &x)
{
  check_tuple(delta.dims(), x);
  const int n = x.level();
  Matrix out(delta.rows() * n, delta.cols() * n);
  for (int i = 0; i < delta.rows(); i++)
  {
    for (int j = 0; j < delta.cols(); j++)
    {
      out.block(i * n, j * n, n, n) = poly_eval(delta(i, j), x);
    }
  }
  return out;
}

}  // namespace ncreal
