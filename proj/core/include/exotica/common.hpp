#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exotica {

  // Exact coefficients for SW series and Laurent polynomials.
  using Integer = boost::multiprecision::cpp_int;

  // Base of every error the library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // Raised when two classes (or series) do not share a lattice.
  class LatticeMismatch : public Error {
   public:
    using Error::Error;
  };

  // An operation was applied to a state that does not satisfy its
  // precondition (insufficient genus, non-taut configuration, ...).
  class PreconditionFailed : public Error {
   public:
    using Error::Error;
  };

  // Internal bookkeeping disagreed with itself. Seen only when constants are
  // deliberately perturbed or a bug slipped in.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  std::string to_string(Integer const& value);

}  // namespace exotica
