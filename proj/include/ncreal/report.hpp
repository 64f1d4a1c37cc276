// SPDX-License-Identifier: Apache-2.0

#ifndef NCREAL_REPORT_HPP
#define NCREAL_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "ncreal/json_io.hpp"

namespace ncreal
{

/// Machine-readable record of one CLI run. Everything except wall_time is a deterministic
/// function of the inputs and the seed.
struct RunReport
{
  std::string command;
  std::string inputs_digest;
  std::uint64_t seed = 0;
  std::map<std::string, double> residuals;
  std::map<std::string, double> tolerances;
  std::map<std::string, bool> verdicts;
  json_io::Json result = json_io::Json::object();
  double wall_time = 0.0;

  /// Record a residual with its tolerance and the verdict drawn from it.
  void check(const std::string &name, double residual, double tolerance, bool passed);

  /// check() with passed = residual <= tolerance.
  void check_at_most(const std::string &name, double residual, double tolerance);

  bool all_passed() const;

  json_io::Json to_json() const;
};

/// 64-bit FNV-1a, hex encoded.
class Digest
{
public:
  void update(std::string_view bytes);
  std::string hex() const;

private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

/// Run a named demo scenario (step1, step2, roundtrip, contractivity).
/// Throws InputError for unknown names.
RunReport run_demo(const std::string &name, std::uint64_t seed);

}  // namespace ncreal

#endif  // NCREAL_REPORT_HPP
