// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace liminal {

/// Base class of every domain error raised by the library.
///
/// kind() is the stable error name ("NonPolynomialQuotient", ...) that the
/// CLI and the Python bindings surface verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LIMINAL_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

/// Weight system fails a structural invariant (arity, positivity, a_i < d).
LIMINAL_DEFINE_ERROR(InvalidWeightSystem);
/// Some 2*a_i > d although an isolated singularity with these weights exists.
LIMINAL_DEFINE_ERROR(NormalizationViolation);
/// prod (t^(d-a_i) - 1)/(t^(a_i) - 1) is not a polynomial with non-negative coefficients.
LIMINAL_DEFINE_ERROR(NonPolynomialQuotient);
LIMINAL_DEFINE_ERROR(NonIntegerMilnorNumber);
/// Dense graded computation would exceed the coefficient cap.
LIMINAL_DEFINE_ERROR(DegreeTooLarge);
/// Exhaustive enumeration exceeded its node budget.
LIMINAL_DEFINE_ERROR(DimensionTooLarge);
LIMINAL_DEFINE_ERROR(InvalidComplex);
LIMINAL_DEFINE_ERROR(InvalidArgument);
/// Text or JSON input could not be parsed.
LIMINAL_DEFINE_ERROR(ParseError);

#undef LIMINAL_DEFINE_ERROR

}  // namespace liminal
