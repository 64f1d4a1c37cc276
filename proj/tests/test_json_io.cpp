// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/json_io.hpp"
#include "ncreal/random.hpp"

using namespace ncreal;
using namespace ncreal::testing;
using ncreal::json_io::Json;
namespace jio = ncreal::json_io;

TEST_CASE("complex and matrix forms")
{
  CHECK(jio::decode_complex(Json(1.5)) == Complex(1.5, 0.0));
  CHECK(jio::decode_complex(Json::parse("[1, -2]")) == Complex(1.0, -2.0));
  CHECK_THROWS_AS(jio::decode_complex(Json::parse("[1, 2, 3]")), InputError);

  const Matrix m = jio::decode_matrix(Json::parse("[[1, [0, 1]], [2, 3]]"));
  CHECK(m(0, 1) == Complex(0.0, 1.0));
  CHECK(m(1, 0) == Complex(2.0, 0.0));
  CHECK_THROWS_AS(jio::decode_matrix(Json::parse("[[1, 2], [3]]")), InputError);
}

TEST_CASE("round trips")
{
  std::mt19937_64 rng(40);
  for (int t = 0; t < 20; t++)
  {
    const FreePoly p = random_poly(2, 3, 4, rng) + FreePoly::constant(2, Complex(0.1, -0.2));
    CHECK(jio::decode_freepoly(jio::encode(p)) == p);

    const DeltaMatrix delta = random_delta(2, 1, 2, 2, rng);
    CHECK(jio::decode_delta(jio::encode(delta)) == delta);

    const MatrixTuple x = random_gaussian_tuple(2, 1 + t % 3, rng);
    const MatrixTuple xr = jio::decode_tuple(jio::encode(x));
    CHECK((xr[0] - x[0]).norm() == 0.0);
    CHECK((xr[1] - x[1]).norm() == 0.0);

    const Colligation c = random_colligation(delta, t % 3, rng);
    const Colligation cr = jio::decode_colligation(jio::encode(c));
    CHECK(cr.model_dim() == c.model_dim());
    CHECK((cr.V() - c.V()).norm() == 0.0);
    CHECK(cr.delta() == c.delta());

    // Text round trip keeps doubles exactly.
    const Json reparsed = jio::parse(jio::encode(c).dump(), "mem");
    CHECK((jio::decode_colligation(reparsed).V() - c.V()).norm() == 0.0);

    const ModelData md = build_model(c, {sample_member(delta, 2, rng)});
    const auto mf = jio::decode_model(jio::encode(md, delta));
    CHECK(mf.delta == delta);
    CHECK((mf.model.uvecs[0] - md.uvecs[0]).norm() == 0.0);
    CHECK((mf.model.values[0] - md.values[0]).norm() == 0.0);
  }
}

TEST_CASE("problem round trip")
{
  InterpolationProblem prob{scalar_delta(), {tuple1(mat({{0.1}})), tuple1(mat({{0.4}}))},
                            {mat({{0.6}}), mat({{0.7}})}, 3};
  const auto back = jio::decode_problem(jio::encode(prob));
  CHECK(back.degree_bound == 3);
  CHECK(back.nodes.size() == 2);
  CHECK(back.targets.size() == 2);
  CHECK(back.targets[1](0, 0) == Complex(0.7, 0.0));
}

TEST_CASE("diagnostics")
{
  try
  {
    jio::parse("{\n  \"a\": [1,\n}", "bad.json");
    FAIL("expected a parse error");
  }
  catch (const InputError &e)
  {
    const std::string msg = e.what();
    CHECK(msg.rfind("bad.json:3:", 0) == 0);
  }

  try
  {
    jio::decode_delta(Json::parse(R"({"I": 1, "J": 1, "entries": [{"d": 1, "terms": [{"word": [2], "coeff": 1}]}]})"));
    FAIL("expected a decode error");
  }
  catch (const InputError &e)
  {
    const std::string msg = e.what();
    CHECK(msg.find("/entries/0") != std::string::npos);
  }

  CHECK_THROWS_AS(jio::decode_tuple(Json::parse(R"({"d": 1, "n": 2, "mats": [[[1]]]})")),
                  InputError);
  CHECK_THROWS_AS(jio::load_file("/nonexistent/file.json"), InputError);
}
