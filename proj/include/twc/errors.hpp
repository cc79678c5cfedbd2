#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twc {

// Base for every library error. `kind` is a stable tag such as
// "NotAssociative"; `witness` holds the offending indices.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string kind_;
  std::vector<int> witness_;
};

// Input that fails a mathematical or structural check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed its configured limit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::vector<int> witness = {})
      : Error("BudgetExceeded", what, std::move(witness)) {}
};

// An internal invariant failed. Always a bug.
class InternalError : public Error {
 public:
  InternalError(const std::string& what, std::vector<int> witness = {})
      : Error("InternalError", what, std::move(witness)) {}
};

}  // namespace twc
