#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), message_(what) {}
  const std::string &kind() const noexcept { return kind_; }
  const std::string &message() const noexcept { return message_; }

private:
  std::string kind_, message_;
};

#define GRASSMANN_ERROR(Name, tag)                                  \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string &what) : Error(tag, what) {}    \
  };

GRASSMANN_ERROR(DimensionError, "dimension")
GRASSMANN_ERROR(DomainError, "domain")
GRASSMANN_ERROR(ParseError, "parse")
GRASSMANN_ERROR(NotAUnitError, "not-a-unit")
GRASSMANN_ERROR(ParityError, "parity")
GRASSMANN_ERROR(NotWellDefinedError, "not-well-defined")
GRASSMANN_ERROR(NotInvertibleError, "not-invertible")
GRASSMANN_ERROR(NotInGroupError, "not-in-group")
GRASSMANN_ERROR(NoPreimageError, "no-preimage")
GRASSMANN_ERROR(UnsupportedError, "unsupported")
GRASSMANN_ERROR(InternalError, "internal")

#undef GRASSMANN_ERROR

// Raised by the two linear solvers; condition names the violated
// solvability requirement, e.g. "(i) i=2" or "(ii) i=1 j=3".
class UnsolvableError : public Error {
public:
  UnsolvableError(std::string condition, int i, int j = 0)
      : Error("unsolvable", "condition " + condition + " fails at i=" + std::to_string(i) +
                                (j ? " j=" + std::to_string(j) : std::string())),
        condition_(std::move(condition)), i_(i), j_(j) {}
  const std::string &condition() const noexcept { return condition_; }
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

private:
  std::string condition_;
  int i_, j_;
};

}  // namespace grassmann
