#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain (r < 1, missing Lassalle values, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Exact division by z^k left a nonzero remainder. Inside an identity check
/// this means the identity is broken.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// An odd power of sqrt(z) survived the formal expectation.
class InconsistentExpectation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace narayana

namespace narayana {

/// Two construction methods produced different polynomials.
class MethodDisagreement : public Error {
 public:
  MethodDisagreement(long r, const std::string& what) : Error(what), r_(r) {}
  long r() const { return r_; }

 private:
  long r_;
};

}  // namespace narayana
