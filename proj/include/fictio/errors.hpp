#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fictio {

// Base class for everything the engine can signal.  Callers that only want a
// coarse success/failure split can catch this; the CLI maps subclasses onto
// exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was applied outside its domain (sqrt of a negative quantity,
// odd valuation, chord outside (0, 2], standard part of an infinite, ...).
struct DomainError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Two numbers cancel through their whole guaranteed coefficient window, so a
// comparison cannot honestly say less/equal/greater.
struct PrecisionExhausted : Error {
  using Error::Error;
};

// Valuation left the supported range.
struct RangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Evaluation failed for a reason other than the arithmetic domain: unbound
// variable, unsupported node for the requested domain, recursion cap.
struct EvalError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

// A bounded search ended without a hit (e.g. no small rational cube root).
struct NotFoundError : Error {
  using Error::Error;
};

// A sampling loop hit its retry cap.
struct SamplingError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace fictio
