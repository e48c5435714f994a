#pragma once

#include <stdexcept>
#include <string>

namespace rdp {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or malformed input data (bad shapes, non-finite values, parse failures).
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: penalty domain, family ordering, q range and the like.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Regression could not be carried out.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Design matrix is rank deficient or the system is underdetermined.
class RankDeficientError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rdp
