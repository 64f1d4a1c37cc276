// SPDX-License-Identifier: Apache-2.0

#include "ncreal/report.hpp"

#include <algorithm>
#include <cstdio>

namespace ncreal
{

void RunReport::check(const std::string &name, double residual, double tolerance, bool passed)
{
  residuals[name] = residual;
  tolerances[name] = tolerance;
  verdicts[name] = passed;
}

void RunReport::check_at_most(const std::string &name, double residual, double tolerance)
{
  check(name, residual, tolerance, residual <= tolerance);
}

bool RunReport::all_passed() const
{
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto &v) { return v.second; });
}

json_io::Json RunReport::to_json() const
{
  using json_io::Json;
  Json res = Json::object(), tol = Json::object(), ver = Json::object();
  for (const auto &[k, v] : residuals)
  {
    res[k] = v;
  }
  for (const auto &[k, v] : tolerances)
  {
    tol[k] = v;
  }
  for (const auto &[k, v] : verdicts)
  {
    ver[k] = v;
  }
  return Json{{"command", command},     {"inputs_digest", inputs_digest},
              {"seed", seed},           {"result", result},
              {"residuals", res},       {"tolerances", tol},
              {"verdicts", ver},        {"wall_time", wall_time}};
}

void Digest::update(std::string_view bytes)
{
  for (unsigned char c : bytes)
  {
    state_ ^= c;
    state_ *= 0x100000001b3ULL;
  }
  // Length separator so that ("ab", "c") and ("a", "bc") differ.
  state_ ^= 0xff;
  state_ *= 0x100000001b3ULL;
}

std::string Digest::hex() const
{
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

}  // namespace ncreal
