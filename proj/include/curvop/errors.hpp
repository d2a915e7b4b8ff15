#pragma once

#include <stdexcept>
#include <string>

namespace curvop {

// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

class FrameError : public Error {
 public:
  explicit FrameError(const std::string& what) : Error(what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

class NotConformallyFlatError : public Error {
 public:
  explicit NotConformallyFlatError(const std::string& what) : Error(what) {}
};

class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& what) : Error(what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

class EmptyFieldError : public Error {
 public:
  explicit EmptyFieldError(const std::string& what) : Error(what) {}
};

// Raised when an input file fails schema or symmetry validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace curvop
