#pragma once

#include <stdexcept>
#include <string>

namespace bsw {

/// Base of every error raised by the workbench.  The kind tag is what the
/// report layer serializes and what decides the process exit code.
class Error : public std::runtime_error {
 public:
  enum class Kind { Structural, Validation, Budget, Sampling, Estimation, Syntax };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Mismatched rings, orders, shapes: a programming error on the caller side.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(Kind::Structural, what) {}
};

/// Inputs that are well formed but violate a precondition.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Kind::Validation, what) {}
};

/// A configured step or size limit was exceeded.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(Kind::Budget, what) {}
};

class SamplingError : public Error {
 public:
  explicit SamplingError(const std::string& what) : Error(Kind::Sampling, what) {}
};

class EstimationError : public Error {
 public:
  explicit EstimationError(const std::string& what) : Error(Kind::Estimation, what) {}
};

/// Text could not be parsed.  Line and column are 1-based; 0 means unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line = 0, int column = 0)
      : Error(Kind::Syntax, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

inline const char* kind_name(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::Structural: return "structural";
    case Error::Kind::Validation: return "validation";
    case Error::Kind::Budget: return "budget";
    case Error::Kind::Sampling: return "sampling";
    case Error::Kind::Estimation: return "estimation";
    case Error::Kind::Syntax: return "syntax";
  }
  return "unknown";
}

}  // namespace bsw
