#pragma once

#include <stdexcept>
#include <string>

namespace buffon {

/// Broad error categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  invalid_input,  // bad arguments or violated preconditions
  resource,       // a desk-scale bound was exceeded
  verification,   // a checked mathematical property failed
  internal,       // a self-consistency check inside the library failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::invalid_input, what) {}
};

struct ModeMismatch : InvalidInput {
  ModeMismatch() : InvalidInput("interval sets use different numeric modes") {}
  explicit ModeMismatch(const std::string& what) : InvalidInput(what) {}
};

struct EmptySetError : InvalidInput {
  explicit EmptySetError(const std::string& what) : InvalidInput(what) {}
};

struct DegenerateScale : InvalidInput {
  DegenerateScale() : InvalidInput("affine map with zero scale") {}
};

struct PreconditionError : InvalidInput {
  explicit PreconditionError(const std::string& what) : InvalidInput(what) {}
};

struct ResolutionError : InvalidInput {
  explicit ResolutionError(const std::string& what) : InvalidInput(what) {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

struct SamplingBudgetExceeded : Error {
  explicit SamplingBudgetExceeded(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

struct StructuralViolation : Error {
  explicit StructuralViolation(const std::string& what)
      : Error(ErrorKind::verification, what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::internal, what) {}
};

}  // namespace buffon
