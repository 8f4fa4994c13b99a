#pragma once

#include <stdexcept>
#include <string>

namespace latdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivisionError : public Error {
 public:
  ZeroDivisionError() : Error("division by the zero polynomial") {}
  explicit ZeroDivisionError(const std::string& what) : Error(what) {}
};

class UndefinedDegreeError : public Error {
 public:
  UndefinedDegreeError() : Error("degree of the zero polynomial is undefined") {}
};

class ExponentOverflowError : public Error {
 public:
  ExponentOverflowError() : Error("monomial exponent exceeds 32767") {}
};

class RingMismatchError : public Error {
 public:
  RingMismatchError() : Error("polynomials live in different variable rings") {}
};

}  // namespace latdeg
