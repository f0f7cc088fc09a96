#pragma once

#include <stdexcept>
#include <string>

namespace cortex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation is asked to work on input that has no defined result
/// (empty corpus, zero words, zero metrics).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace cortex
