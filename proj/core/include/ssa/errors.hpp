#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ssa {

// Default cap on exhaustive enumerations (4^13 states).
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: bad nucleotide characters, mixed word lengths, bad hex.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A parameter outside the supported range, or an invalid generating set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration whose size exceeds the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, long double required, std::uint64_t budget)
      : Error(what), required_(required), budget_(budget) {}

  long double required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  long double required_;
  std::uint64_t budget_;
};

// A sequence presented for decoding that is not a codeword. `position` is the
// 1-based start of the first window outside the generating set.
class NotInCodeError : public Error {
 public:
  NotInCodeError(const std::string& what, std::size_t position, std::string window)
      : Error(what), position_(position), window_(std::move(window)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& window() const noexcept { return window_; }

 private:
  std::size_t position_;
  std::string window_;
};

}  // namespace ssa
