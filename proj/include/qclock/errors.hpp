#pragma once

#include <stdexcept>
#include <string>

namespace qclock {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier used by the CLI when emitting error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg)
      : Error("DimensionMismatch", msg) {}
};

struct InvalidDimension : Error {
  explicit InvalidDimension(const std::string& msg)
      : Error("InvalidDimension", msg) {}
};

struct TensorTooLarge : Error {
  explicit TensorTooLarge(const std::string& msg)
      : Error("TensorTooLarge", msg) {}
};

struct NotCommutative : Error {
  explicit NotCommutative(const std::string& msg)
      : Error("NotCommutative", msg) {}
};

struct NonIntegerVolume : Error {
  explicit NonIntegerVolume(const std::string& msg)
      : Error("NonIntegerVolume", msg) {}
};

struct NotUnitary : Error {
  explicit NotUnitary(const std::string& msg) : Error("NotUnitary", msg) {}
};

/// Generator spectrum is off the clock's energy grid: U^omega != I.
struct NotCyclic : Error {
  NotCyclic(const std::string& msg, double res)
      : Error("NotCyclic", msg), residual(res) {}
  double residual;
};

struct IncompleteBasis : Error {
  explicit IncompleteBasis(const std::string& msg)
      : Error("IncompleteBasis", msg) {}
};

struct NonOrthogonal : Error {
  explicit NonOrthogonal(const std::string& msg)
      : Error("NonOrthogonal", msg) {}
};

struct ClockMismatch : Error {
  explicit ClockMismatch(const std::string& msg)
      : Error("ClockMismatch", msg) {}
};

struct ZeroState : Error {
  explicit ZeroState(const std::string& msg) : Error("ZeroState", msg) {}
};

struct InvalidSystem : Error {
  explicit InvalidSystem(const std::string& msg)
      : Error("InvalidSystem", msg) {}
};

struct InvalidFamily : Error {
  explicit InvalidFamily(const std::string& msg)
      : Error("InvalidFamily", msg) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error("OutOfRange", msg) {}
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error("SyntaxError", msg), line(line_), col(col_) {}
  int line;
  int col;
};

struct UnknownGenerator : Error {
  UnknownGenerator(const std::string& msg, int line_, int col_)
      : Error("UnknownGenerator", msg), line(line_), col(col_) {}
  int line;
  int col;
};

struct ProfileMismatch : Error {
  explicit ProfileMismatch(const std::string& msg)
      : Error("ProfileMismatch", msg) {}
};

struct UnboundSystem : Error {
  explicit UnboundSystem(const std::string& msg)
      : Error("UnboundSystem", msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

}  // namespace qclock
