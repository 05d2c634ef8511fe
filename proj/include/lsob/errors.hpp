#ifndef LSOB_ERRORS_HPP
#define LSOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsob {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or malformed input. The CLI maps this to exit code 2.
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// A polynomial division that must be exact left a remainder.
class InexactDivision : public Error {
   public:
    using Error::Error;
};

/// Γ(α+k+1) requested in exact mode for a non-integer α.
class GammaUnavailable : public Error {
   public:
    using Error::Error;
};

class PositiveDefiniteViolation : public Error {
   public:
    using Error::Error;
};

class SingularSystem : public Error {
   public:
    using Error::Error;
};

/// A polynomial identity that must hold did not.
class IdentityViolation : public Error {
   public:
    using Error::Error;
};

/// A ladder operator applied to a polynomial did not return a polynomial.
class NonPolynomialResult : public Error {
   public:
    using Error::Error;
};

class NoConvergence : public Error {
   public:
    using Error::Error;
};

/// An evaluation point coincides with a charge or a pole of the field.
class PoleCollision : public Error {
   public:
    using Error::Error;
};

}  // namespace lsob

#endif  // LSOB_ERRORS_HPP
