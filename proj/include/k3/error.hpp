#pragma once

#include <stdexcept>
#include <string>

namespace k3 {

enum class ErrorCode {
  kParse = 1,
  kDivisionByZero,
  kReducibility,
  kConfiguration,
  kDomain,
  kPrecondition,
  kNumeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an element fails to invert in an extension whose defining
// polynomial was assumed irreducible; `factor` is the common factor found.
class ReducibilityWitness : public Error {
 public:
  explicit ReducibilityWitness(std::string factor)
      : Error(ErrorCode::kReducibility, "defining polynomial is reducible: common factor " + factor),
        factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace k3
