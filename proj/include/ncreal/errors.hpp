// SPDX-License-Identifier: Apache-2.0

#ifndef NCREAL_ERRORS_HPP
#define NCREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncreal
{

// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatches, bad shapes, non-finite entries, JSON problems.
class InputError : public Error
{
public:
  using Error::Error;
};

// A point lies outside the polynomial polyhedron (or another domain restriction).
class DomainError : public Error
{
public:
  using Error::Error;
};

// The requested object does not exist at working precision: w inside the algebra, fit
// infeasible, Gram mismatch, scaling search exhausted.
class InfeasibleError : public Error
{
public:
  using Error::Error;
};

// A linear solve hit a numerically singular matrix.
class SingularError : public Error
{
public:
  using Error::Error;
};

// A random sampler failed to produce admissible points.
class SamplerExhausted : public Error
{
public:
  using Error::Error;
};

}  // namespace ncreal

#endif  // NCREAL_ERRORS_HPP
