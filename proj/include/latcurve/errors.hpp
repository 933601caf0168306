#pragma once

#include <stdexcept>
#include <string>

namespace latcurve {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needed lattice points outside the materialized grid.
class MarginTooSmall : public Error {
 public:
  using Error::Error;
};

class InconsistentSemigroup : public Error {
 public:
  using Error::Error;
};

class PathInconsistency : public Error {
 public:
  using Error::Error;
};

class InvalidSeries : public Error {
 public:
  using Error::Error;
};

class InvalidHilbert : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class EulerMismatch : public Error {
 public:
  using Error::Error;
};

class TorsionFound : public Error {
 public:
  using Error::Error;
};

class UndefinedWeight : public Error {
 public:
  using Error::Error;
};

class TruncationUnsound : public Error {
 public:
  using Error::Error;
};

class RouteDisagreement : public Error {
 public:
  using Error::Error;
};

class UnknownGerm : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// A structural property that must hold for every valid germ failed; always a defect.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace latcurve
