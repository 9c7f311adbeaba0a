#pragma once

#include <stdexcept>
#include <string>

namespace ordhull {

// Base for structured failures. Constructors and loaders throw; query-style
// checks (order-completeness, action validation, ...) return verdict structs
// instead and never throw on a mere "false".
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct EmptyPoset : Error {
  using Error::Error;
};

struct AntisymmetryViolation : Error {
  AntisymmetryViolation(const std::string& a, const std::string& b)
      : Error("antisymmetry violation: " + a + " <= " + b + " <= " + a), first(a), second(b) {}
  std::string first, second;
};

struct NotOrderComplete : Error {
  using Error::Error;
};

struct NotAssociative : Error {
  using Error::Error;
};

struct NotAHomomorphism : Error {
  using Error::Error;
};

struct EmptyGenerators : Error {
  using Error::Error;
};

struct GroupModeOnNonGroup : Error {
  using Error::Error;
};

struct NotGenerating : Error {
  using Error::Error;
};

struct TargetNotMonoid : Error {
  using Error::Error;
};

struct TargetNotGroup : Error {
  using Error::Error;
};

struct NotAGroup : Error {
  using Error::Error;
};

struct Ax0Violation : Error {
  using Error::Error;
};

struct Ax1Violation : Error {
  using Error::Error;
};

struct Ax2Violation : Error {
  using Error::Error;
};

struct OrbitwiseNeedsGroups : Error {
  using Error::Error;
};

struct BoundsTooLarge : Error {
  using Error::Error;
};

struct UnknownStatement : Error {
  using Error::Error;
};

struct DomainEscape : Error {
  using Error::Error;
};

}  // namespace ordhull
