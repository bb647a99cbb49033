#pragma once

#include <stdexcept>
#include <string>

namespace mbent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MBENT_DECLARE_ERROR(Name)                                             \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  }

// State construction and I/O.
MBENT_DECLARE_ERROR(ZeroState);
MBENT_DECLARE_ERROR(SystemMismatch);
MBENT_DECLARE_ERROR(ParseError);
MBENT_DECLARE_ERROR(ConstraintViolation);

// Numerics.
MBENT_DECLARE_ERROR(NotHermitian);
MBENT_DECLARE_ERROR(NoConvergence);
MBENT_DECLARE_ERROR(InvalidDistribution);

// Entanglement and models.
MBENT_DECLARE_ERROR(SingleKind);
MBENT_DECLARE_ERROR(InvalidCut);
MBENT_DECLARE_ERROR(DomainError);
MBENT_DECLARE_ERROR(EmptyBlock);

#undef MBENT_DECLARE_ERROR

}  // namespace mbent
