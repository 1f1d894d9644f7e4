#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supplied reduction polynomial factors over F_2.
class ReducibleModulus : public Error {
 public:
  using Error::Error;
};

/// Extension degree outside 1..24, or a modulus whose degree is not m.
class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// gcd(k, m) != 1.
class NotCoprime : public Error {
 public:
  using Error::Error;
};

/// A parameter or element lies outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A symbolic division by X^2 met a monomial of degree 0 or 1.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace permpoly
