#pragma once

#include <stdexcept>
#include <string>

namespace pathring {

// Every failure the library reports derives from this; `kind()` is a stable
// tag that the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PATHRING_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}       \
  };

PATHRING_DEFINE_ERROR(ParseError)
PATHRING_DEFINE_ERROR(SubspaceNotContained)
PATHRING_DEFINE_ERROR(InvalidCDGA)
PATHRING_DEFINE_ERROR(InvalidAugmentation)
PATHRING_DEFINE_ERROR(NotConnective)
PATHRING_DEFINE_ERROR(NotCurveLike)
PATHRING_DEFINE_ERROR(NonVanishingProducts)
PATHRING_DEFINE_ERROR(DifferentialSquareNonzero)
PATHRING_DEFINE_ERROR(BasisCapExceeded)
PATHRING_DEFINE_ERROR(TruncationExceeded)
PATHRING_DEFINE_ERROR(TruncationMismatch)
PATHRING_DEFINE_ERROR(ZeroH0)
PATHRING_DEFINE_ERROR(NonChainMap)
PATHRING_DEFINE_ERROR(PathTooClose)
PATHRING_DEFINE_ERROR(ToleranceNotMet)
PATHRING_DEFINE_ERROR(EndpointMismatch)
PATHRING_DEFINE_ERROR(InvalidPath)

#undef PATHRING_DEFINE_ERROR

}  // namespace pathring
