#pragma once

#include <stdexcept>
#include <string>

namespace pwc {

// Base of every error raised by the library. `exit_code` is what the CLI
// returns when the error escapes a command (2 = bad input, 3 = internal).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, int exit_code = 3)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& w) : Error("not divisible: " + w) {}
};

struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& w) : Error("not symmetric: " + w) {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& w) : Error("degenerate input: " + w) {}
};

struct InvalidParameters : Error {
  explicit InvalidParameters(const std::string& w) : Error("invalid parameters: " + w, 2) {}
};

struct SingularMap : Error {
  explicit SingularMap(const std::string& w) : Error("singular affine map: " + w, 2) {}
};

struct DiagonalNotVanishing : Error {
  explicit DiagonalNotVanishing(const std::string& w)
      : Error("closing numerator does not vanish on y1=y2: " + w) {}
};

struct ContinuumDetected : Error {
  ContinuumDetected() : Error("closing equations admit a continuum of solutions") {}
};

struct SchemaError : Error {
  SchemaError(const std::string& path, const std::string& w)
      : Error("schema error at " + path + ": " + w, 2), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct InvariantError : Error {
  explicit InvariantError(const std::string& w) : Error("invariant violated: " + w, 2) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error("i/o error: " + w, 2) {}
};

}  // namespace pwc
