#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperramsey {

// Invalid arguments or violated preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed .uhg / .col input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A search ran out of its node or time budget before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

// No object with the requested property exists (e.g. no good coloring of K_s).
class NoneExists : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search bound was reached without an answer (e.g. ramsey_number past n_max).
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A post-condition that the theory guarantees was observed to fail.
// Never caught and patched inside the library.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hyperramsey
