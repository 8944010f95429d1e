#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symbreak {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 / edge-list input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of nodes or time before reaching a complete answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t limit, std::uint64_t used)
      : Error(what + " (limit " + std::to_string(limit) + ", used " +
              std::to_string(used) + ")"),
        limit_(limit),
        used_(used) {}

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_;
};

/// The requested quantity does not exist for this graph (e.g. the
/// distinguishing index of K2).
class UndefinedQuantity : public Error {
 public:
  using Error::Error;
};

}  // namespace symbreak
