// SPDX-License-Identifier: Apache-2.0

#include "ncreal/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ncreal/errors.hpp"

namespace ncreal::json_io
{

namespace
{

[[noreturn]] void fail(const std::string &path, const std::string &msg)
{
  throw InputError((path.empty() ? std::string("/") : path) + ": " + msg);
}

const Json &field(const Json &j, const std::string &path, const char *key)
{
  if (!j.is_object())
  {
    fail(path, "expected an object");
  }
  auto it = j.find(key);
  if (it == j.end())
  {
    fail(path, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int decode_int(const Json &j, const std::string &path)
{
  if (!j.is_number_integer())
  {
    fail(path, "expected an integer");
  }
  return j.get<int>();
}

const Json &array_at(const Json &j, const std::string &path)
{
  if (!j.is_array())
  {
    fail(path, "expected an array");
  }
  return j;
}

std::string join(const std::string &path, const std::string &key)
{
  return path + "/" + key;
}

std::string join(const std::string &path, std::size_t i)
{
  return path + "/" + std::to_string(i);
}

}  // namespace

Json parse(const std::string &text, const std::string &source)
{
  try
  {
    return Json::parse(text);
  }
  catch (const nlohmann::json::parse_error &e)
  {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; i++)
    {
      if (text[i] == '\n')
      {
        line++;
        col = 1;
      }
      else
      {
        col++;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

Json load_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw InputError(path + ": cannot open file");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

Json encode(Complex c)
{
  return Json::array({c.real(), c.imag()});
}

Json encode(const Matrix &m)
{
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); i++)
  {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); j++)
    {
      row.push_back(encode(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json encode_vector(const Vector &v)
{
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); i++)
  {
    out.push_back(encode(v(i)));
  }
  return out;
}

Json encode(const Word &w)
{
  return Json(w.letters);
}

Json encode(const FreePoly &p)
{
  Json terms = Json::array();
  for (const auto &[w, c] : p.terms())
  {
    terms.push_back(Json{{"word", encode(w)}, {"coeff", encode(c)}});
  }
  return Json{{"d", p.dims()}, {"terms", std::move(terms)}};
}

Json encode(const DeltaMatrix &delta)
{
  Json entries = Json::array();
  for (const auto &e : delta.entries())
  {
    entries.push_back(encode(e));
  }
  return Json{{"I", delta.rows()}, {"J", delta.cols()}, {"entries", std::move(entries)}};
}

Json encode(const MatrixTuple &x)
{
  Json mats = Json::array();
  for (const auto &m : x.mats())
  {
    mats.push_back(encode(m));
  }
  return Json{{"d", x.dims()}, {"n", x.level()}, {"mats", std::move(mats)}};
}

Json encode(const Colligation &c)
{
  return Json{{"m", c.model_dim()},       {"delta", encode(c.delta())},
              {"A", encode(Complex(c.A()))}, {"B", encode(c.B())},
              {"C", encode(c.C())},          {"D", encode(c.D())}};
}

Json encode(const ModelData &md, const DeltaMatrix &delta)
{
  Json points = Json::array(), values = Json::array(), uvecs = Json::array();
  for (const auto &x : md.points)
  {
    points.push_back(encode(x));
  }
  for (const auto &v : md.values)
  {
    values.push_back(encode(v));
  }
  for (const auto &u : md.uvecs)
  {
    uvecs.push_back(encode(u));
  }
  return Json{{"m", md.m},
              {"delta", encode(delta)},
              {"points", std::move(points)},
              {"values", std::move(values)},
              {"uvecs", std::move(uvecs)}};
}

Json encode(const InterpolationProblem &prob)
{
  Json nodes = Json::array(), targets = Json::array();
  for (const auto &x : prob.nodes)
  {
    nodes.push_back(encode(x));
  }
  for (const auto &t : prob.targets)
  {
    targets.push_back(encode(t));
  }
  return Json{{"delta", encode(prob.delta)},
              {"nodes", std::move(nodes)},
              {"targets", std::move(targets)},
              {"degree_bound", prob.degree_bound}};
}

Json encode(const PolyhedronReport &r)
{
  return Json{{"norm", r.norm}, {"member", r.member}, {"margin", r.margin}};
}

Json encode(const SeparationCertificate &cert)
{
  Json residuals = Json::object();
  for (const auto &[k, v] : cert.residuals)
  {
    residuals[k] = v;
  }
  return Json{{"alpha_over_beta", cert.alpha_over_beta},
              {"K", encode(cert.K)},
              {"u", encode_vector(cert.u)},
              {"v", encode_vector(cert.v)},
              {"N", encode(cert.N)},
              {"s", encode(cert.s)},
              {"residuals", std::move(residuals)}};
}

Json encode(const IdealBasis &ideal)
{
  Json basis = Json::array();
  for (const auto &q : ideal.basis)
  {
    basis.push_back(encode(q));
  }
  return Json{{"degree_bound", ideal.degree_bound},
              {"dim", ideal.dim()},
              {"basis", std::move(basis)}};
}

Complex decode_complex(const Json &j, const std::string &path)
{
  if (j.is_number())
  {
    return Complex(j.get<double>(), 0.0);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
  {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  fail(path, "expected a complex number [re, im]");
}

Matrix decode_matrix(const Json &j, const std::string &path)
{
  const Json &rows = array_at(j, path);
  if (rows.empty())
  {
    return Matrix(0, 0);
  }
  const std::size_t ncols = array_at(rows[0], join(path, 0)).size();
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(ncols));
  for (std::size_t i = 0; i < rows.size(); i++)
  {
    const Json &row = array_at(rows[i], join(path, i));
    if (row.size() != ncols)
    {
      fail(join(path, i), "row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(ncols));
    }
    for (std::size_t k = 0; k < ncols; k++)
    {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          decode_complex(row[k], join(join(path, i), k));
    }
  }
  return out;
}

Word decode_word(const Json &j, int d, const std::string &path)
{
  const Json &arr = array_at(j, path);
  std::vector<int> letters;
  for (std::size_t k = 0; k < arr.size(); k++)
  {
    const int r = decode_int(arr[k], join(path, k));
    if (r < 1 || r > d)
    {
      fail(join(path, k), "letter " + std::to_string(r) + " outside 1.." + std::to_string(d));
    }
    letters.push_back(r);
  }
  return Word(std::move(letters));
}

FreePoly decode_freepoly(const Json &j, const std::string &path)
{
  const int d = decode_int(field(j, path, "d"), join(path, "d"));
  if (d < 1)
  {
    fail(join(path, "d"), "must be >= 1");
  }
  const std::string tpath = join(path, "terms");
  const Json &terms = array_at(field(j, path, "terms"), tpath);
  FreePoly::Terms out;
  for (std::size_t k = 0; k < terms.size(); k++)
  {
    const std::string p = join(tpath, k);
    Word w = decode_word(field(terms[k], p, "word"), d, join(p, "word"));
    out[std::move(w)] += decode_complex(field(terms[k], p, "coeff"), join(p, "coeff"));
  }
  return FreePoly(d, std::move(out));
}

DeltaMatrix decode_delta(const Json &j, const std::string &path)
{
  const int rows = decode_int(field(j, path, "I"), join(path, "I"));
  const int cols = decode_int(field(j, path, "J"), join(path, "J"));
  if (rows < 1 || cols < 1)
  {
    fail(path, "I and J must be >= 1");
  }
  const std::string epath = join(path, "entries");
  const Json &entries = array_at(field(j, path, "entries"), epath);
  if (entries.size() != static_cast<std::size_t>(rows) * cols)
  {
    fail(epath, "expected " + std::to_string(rows * cols) + " entries");
  }
  std::vector<FreePoly> polys;
  for (std::size_t k = 0; k < entries.size(); k++)
  {
    polys.push_back(decode_freepoly(entries[k], join(epath, k)));
    if (polys.back().dims() != polys.front().dims())
    {
      fail(join(epath, k), "entries disagree on d");
    }
  }
  return DeltaMatrix(rows, cols, std::move(polys));
}

MatrixTuple decode_tuple(const Json &j, const std::string &path)
{
  const int d = decode_int(field(j, path, "d"), join(path, "d"));
  const int n = decode_int(field(j, path, "n"), join(path, "n"));
  if (d < 1 || n < 1)
  {
    fail(path, "d and n must be >= 1");
  }
  const std::string mpath = join(path, "mats");
  const Json &mats = array_at(field(j, path, "mats"), mpath);
  if (mats.size() != static_cast<std::size_t>(d))
  {
    fail(mpath, "expected " + std::to_string(d) + " matrices");
  }
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < mats.size(); r++)
  {
    Matrix m = decode_matrix(mats[r], join(mpath, r));
    if (m.rows() != n || m.cols() != n)
    {
      fail(join(mpath, r), "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                               " matrix");
    }
    out.push_back(std::move(m));
  }
  try
  {
    return MatrixTuple(std::move(out));
  }
  catch (const InputError &e)
  {
    fail(path, e.what());
  }
}

Colligation decode_colligation(const Json &j, const std::string &path)
{
  const int m = decode_int(field(j, path, "m"), join(path, "m"));
  DeltaMatrix delta = decode_delta(field(j, path, "delta"), join(path, "delta"));
  const Json &ja = field(j, path, "A");
  Complex A;
  if (ja.is_array() && !ja.empty() && ja[0].is_array())
  {
    const Matrix am = decode_matrix(ja, join(path, "A"));
    if (am.rows() != 1 || am.cols() != 1)
    {
      fail(join(path, "A"), "expected a 1x1 matrix");
    }
    A = am(0, 0);
  }
  else
  {
    A = decode_complex(ja, join(path, "A"));
  }
  const Eigen::Index mi = static_cast<Eigen::Index>(m) * delta.rows();
  const Eigen::Index mj = static_cast<Eigen::Index>(m) * delta.cols();
  // Empty blocks (m = 0) lose a dimension in the row encoding; restore it.
  auto block = [&](const char *key, Eigen::Index rows, Eigen::Index cols) {
    Matrix b = decode_matrix(field(j, path, key), join(path, key));
    if (b.size() == 0 && rows * cols == 0)
    {
      return Matrix(rows, cols);
    }
    if (b.rows() != rows || b.cols() != cols)
    {
      fail(join(path, key), "expected a " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " block");
    }
    return b;
  };
  const Matrix B = block("B", 1, mi);
  const Matrix C = block("C", mj, 1);
  const Matrix D = block("D", mj, mi);
  try
  {
    return Colligation(std::move(delta), m, A, B, C, D);
  }
  catch (const InputError &e)
  {
    fail(path, e.what());
  }
}

ModelFile decode_model(const Json &j, const std::string &path)
{
  ModelData md;
  md.m = decode_int(field(j, path, "m"), join(path, "m"));
  if (md.m < 0)
  {
    fail(join(path, "m"), "must be >= 0");
  }
  DeltaMatrix delta = decode_delta(field(j, path, "delta"), join(path, "delta"));
  const std::string ppath = join(path, "points"), vpath = join(path, "values"),
                    upath = join(path, "uvecs");
  const Json &points = array_at(field(j, path, "points"), ppath);
  const Json &values = array_at(field(j, path, "values"), vpath);
  const Json &uvecs = array_at(field(j, path, "uvecs"), upath);
  if (values.size() != points.size() || uvecs.size() != points.size())
  {
    fail(path, "points, values and uvecs must have equal length");
  }
  for (std::size_t k = 0; k < points.size(); k++)
  {
    md.points.push_back(decode_tuple(points[k], join(ppath, k)));
    md.values.push_back(decode_matrix(values[k], join(vpath, k)));
    md.uvecs.push_back(decode_matrix(uvecs[k], join(upath, k)));
  }
  return ModelFile{std::move(delta), std::move(md)};
}

InterpolationProblem decode_problem(const Json &j, const std::string &path)
{
  InterpolationProblem prob{decode_delta(field(j, path, "delta"), join(path, "delta")), {},
                            {}, 0};
  const std::string npath = join(path, "nodes");
  const Json &nodes = array_at(field(j, path, "nodes"), npath);
  for (std::size_t k = 0; k < nodes.size(); k++)
  {
    prob.nodes.push_back(decode_tuple(nodes[k], join(npath, k)));
  }
  if (j.contains("targets"))
  {
    const std::string tpath = join(path, "targets");
    const Json &targets = array_at(j["targets"], tpath);
    if (!targets.empty() && targets.size() != nodes.size())
    {
      fail(tpath, "need one target per node");
    }
    for (std::size_t k = 0; k < targets.size(); k++)
    {
      prob.targets.push_back(decode_matrix(targets[k], join(tpath, k)));
    }
  }
  if (j.contains("degree_bound"))
  {
    prob.degree_bound = decode_int(j["degree_bound"], join(path, "degree_bound"));
  }
  return prob;
}

}  // namespace ncreal::json_io
