#pragma once

#include <stdexcept>
#include <string>

namespace quiverhh {

// Base for every error raised by the library. Input problems and internal
// consistency failures are distinguished by the two intermediate classes so
// that the CLI can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, violated assumptions on the quiver or relations.
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematical identity that must hold did not. Always a bug or a defect in
// the input model, never a user mistake.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("parse error at byte " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class InfiniteDimensional : public InputError {
 public:
  using InputError::InputError;
};

class NotRadicalSquareZero : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class DegreeTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class ImageNotInKernel : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class QuotientNotClosed : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class RadicalNotSolvable : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class ComplexBroken : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class Mismatch : public ConsistencyError {
 public:
  Mismatch(const std::string& message, std::string payload)
      : ConsistencyError(message), payload_(std::move(payload)) {}
  // Full diagnostic dump (JSON text) of the comparison that failed.
  const std::string& payload() const { return payload_; }

 private:
  std::string payload_;
};

}  // namespace quiverhh
