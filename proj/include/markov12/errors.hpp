#pragma once

#include <stdexcept>
#include <string>

namespace markov12 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct VariableCountMismatch : Error {
  using Error::Error;
};
struct NotDivisible : Error {
  using Error::Error;
};
struct EvaluationError : Error {
  using Error::Error;
};

struct NotASolution : Error {
  using Error::Error;
};
struct NonPositiveResult : Error {
  using Error::Error;
};
struct WrongShape : Error {
  using Error::Error;
};
struct InternalInconsistency : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotSkewSymmetrizable : Error {
  using Error::Error;
};
struct LaurentViolation : Error {
  using Error::Error;
};

struct InvalidArc : Error {
  using Error::Error;
};

}  // namespace markov12
