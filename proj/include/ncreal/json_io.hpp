// SPDX-License-Identifier: Apache-2.0

///
/// \file json_io.hpp
///
/// JSON encoding. Complex numbers are [re, im] (a bare number is read as real); matrices are
/// arrays of rows; words are arrays of 1-based letters.
///
///   FreePoly     {"d": 2, "terms": [{"word": [1, 2], "coeff": [1, 0]}, ...]}
///   DeltaMatrix  {"I": 1, "J": 1, "entries": [FreePoly, ...]}          (row-major)
///   MatrixTuple  {"d": 2, "n": 2, "mats": [matrix, ...]}
///   Colligation  {"m": 1, "delta": DeltaMatrix, "A": .., "B": .., "C": .., "D": ..}
///   ModelData    {"m": 1, "delta": DeltaMatrix, "points": [..], "values": [..], "uvecs": [..]}
///   Problem      {"delta": DeltaMatrix, "nodes": [..], "targets": [..], "degree_bound": 2}
///
/// Decoding errors are InputError with a JSON-pointer style location.
///

#ifndef NCREAL_JSON_IO_HPP
#define NCREAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "ncreal/algebra.hpp"
#include "ncreal/freepoly.hpp"
#include "ncreal/mattuple.hpp"
#include "ncreal/realization.hpp"
#include "ncreal/synthesis.hpp"

namespace ncreal::json_io
{

using Json = nlohmann::ordered_json;

/// Parse text, reporting syntax errors as "<source>:<line>:<column>: <message>".
Json parse(const std::string &text, const std::string &source);

/// Read and parse a file.
Json load_file(const std::string &path);

Json encode(Complex c);
Json encode(const Matrix &m);
Json encode_vector(const Vector &v);
Json encode(const Word &w);
Json encode(const FreePoly &p);
Json encode(const DeltaMatrix &delta);
Json encode(const MatrixTuple &x);
Json encode(const Colligation &c);
Json encode(const ModelData &md, const DeltaMatrix &delta);
Json encode(const InterpolationProblem &prob);
Json encode(const PolyhedronReport &r);
Json encode(const SeparationCertificate &cert);
Json encode(const IdealBasis &ideal);

Complex decode_complex(const Json &j, const std::string &path = "");
Matrix decode_matrix(const Json &j, const std::string &path = "");
Word decode_word(const Json &j, int d, const std::string &path = "");
FreePoly decode_freepoly(const Json &j, const std::string &path = "");
DeltaMatrix decode_delta(const Json &j, const std::string &path = "");
MatrixTuple decode_tuple(const Json &j, const std::string &path = "");
Colligation decode_colligation(const Json &j, const std::string &path = "");

struct ModelFile
{
  DeltaMatrix delta;
  ModelData model;
};
ModelFile decode_model(const Json &j, const std::string &path = "");

InterpolationProblem decode_problem(const Json &j, const std::string &path = "");

}  // namespace ncreal::json_io

#endif  // NCREAL_JSON_IO_HPP
