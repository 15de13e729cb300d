#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcjmedian {

/// Malformed instance text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a genome or instance invariant
/// (gene coverage, gene-count mismatch, wrong number of genomes, ...).
class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exhaustive oracle was asked to enumerate more than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcjmedian
