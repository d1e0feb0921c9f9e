#pragma once

#include <stdexcept>
#include <string>

namespace njc {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

// algebra
struct TailTooHeavy : Error { using Error::Error; };
struct IndexBeyondCutoff : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// spectrum
struct KerrTermRequired : Error { using Error::Error; };
struct DegenerateBlock : Error { using Error::Error; };

// dynamics / observables
struct EmptyGrid : Error { using Error::Error; };
struct NoRevivalScale : Error { using Error::Error; };
struct VacuumOnly : Error { using Error::Error; };

// io
struct IoError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };

/// Malformed configuration text. Carries the offending line (1-based, 0 when
/// unknown) and key.
class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : Error("line " + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") + ": " +
              what),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace njc
