#pragma once

#include <stdexcept>
#include <string>

namespace bicyclic {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A signed 64-bit add/sub/mul left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Operand outside the domain of an operation: negative coordinates,
// elements whose set is not in the ambient family, non-canonical family
// where the two-element family is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid family (not omega-closed, contains the empty set, missing [0))
// or a product whose set does not resolve to a member of the family.
class FamilyError : public Error {
 public:
  using Error::Error;
};

// Which parameter constraint an endomorphism construction violated.
enum class RangeConstraint {
  KPositive,        // k >= 1
  KAtLeastTwo,      // beta needs k >= 2
  PNonNegative,     // p >= 0
  PExceedsKMinus1,  // p <= k - 1
  PZeroCollision,   // beta needs p >= 1
};

const char* describe(RangeConstraint c) noexcept;

class ParameterRangeError : public Error {
 public:
  ParameterRangeError(RangeConstraint c, const std::string& what)
      : Error(what), constraint_(c) {}

  RangeConstraint constraint() const noexcept { return constraint_; }

 private:
  RangeConstraint constraint_;
};

}  // namespace bicyclic
