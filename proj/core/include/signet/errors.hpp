#pragma once

#include <stdexcept>
#include <string>

namespace signet {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid graph, partition, dimension or argument.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; message carries file/line context.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure, ambiguous numerical rank, or step instability.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A structural verdict contradicted the numerical test it annotates.
/// This is an internal soundness violation and always aborts the analysis.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace signet
