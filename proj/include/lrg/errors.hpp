#pragma once

#include <stdexcept>
#include <string>

namespace lrg {

/// Error while reading a .lrs file; carries the 1-based line/column of the
/// offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A configured resource cap (ball element count, iteration bound, ...) was
/// exceeded. Callers either raise the cap or accept a partial result where
/// the operation defines one.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lrg
