#pragma once

#include <stdexcept>
#include <string>

namespace cpc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured element or pair budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands or arguments violate a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSoluble : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

}  // namespace cpc
