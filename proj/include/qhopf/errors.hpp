#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A structure function was evaluated at the zero of G, z = 1/(q-1).
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class EmptySampleSet : public Error {
 public:
  using Error::Error;
};

/// log_q(c G(z)) requested where c G(z) <= 0; a leg colour does not match the
/// representation it is evaluated on.
class LogDomainError : public Error {
 public:
  using Error::Error;
};

class ColourMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class DegenerateKernel : public Error {
 public:
  using Error::Error;
};

class MalformedExpr : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyReport : public Error {
 public:
  using Error::Error;
};

}  // namespace qhopf
