// ============================================================================
// errors.hpp — exception hierarchy for the toolkit
// ============================================================================
//
// All failures surface as subclasses of qht::Error so callers (and the CLI)
// can translate them into exit codes uniformly:
//
//   ValidationError        malformed or inconsistent input data
//   NotPsdError            operator required to be PSD has a genuinely
//                          negative eigenvalue (beyond tolerance)
//   ArgumentError          scalar argument outside its domain
//   ResourceError          a configured memory/size guard would be exceeded
//   DegenerateSupportError a trace underflowed to <= 0 because supports are
//                          (numerically) disjoint
//   NumericError           an iteration failed to converge
// ============================================================================

#pragma once

#include <stdexcept>
#include <string>

namespace qht {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class DegenerateSupportError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace qht
