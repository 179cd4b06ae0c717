#ifndef VH_ERRORS_HPP
#define VH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vh {

/// Base of every error raised by the library. The CLI maps ParseError to
/// exit code 1 and everything else derived from Error to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

#define VH_DECLARE_ERROR(Name)   \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  };

// sl2-core
VH_DECLARE_ERROR(NotPositiveWord)
VH_DECLARE_ERROR(NotLRFactorable)
VH_DECLARE_ERROR(DeterminantViolation)
// subgroup-membership
VH_DECLARE_ERROR(EnumerationOverflow)
VH_DECLARE_ERROR(IncompleteClassification)
VH_DECLARE_ERROR(CertificateFailure)
// poly-ring
VH_DECLARE_ERROR(NotSquare)
VH_DECLARE_ERROR(NotAUnit)
VH_DECLARE_ERROR(IndexOutOfRange)
VH_DECLARE_ERROR(ZeroPolynomial)
VH_DECLARE_ERROR(DimensionMismatch)
// slope-calc
VH_DECLARE_ERROR(ZeroVector)
VH_DECLARE_ERROR(MatrixMismatch)
VH_DECLARE_ERROR(NonIntegralTwist)
// census
VH_DECLARE_ERROR(BoundOutOfRange)

#undef VH_DECLARE_ERROR

/// Raised when a determinant violates a structural fact the construction
/// guarantees (linearity in p,q for the three-fold case, q-divisibility for
/// the four-fold case). Carries the offending polynomial in text form.
class StructuralAssertionFailed : public Error {
 public:
  StructuralAssertionFailed(const std::string& what, std::string polynomial)
      : Error(what + ": " + polynomial), polynomial_(std::move(polynomial)) {}
  const std::string& polynomial() const { return polynomial_; }

 private:
  std::string polynomial_;
};

}  // namespace vh

#endif  // VH_ERRORS_HPP
