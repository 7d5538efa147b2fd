#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liskron {

// Exit-code contract used by the CLI:
//   0 verified / success
//   1 counterexample found
//   2 usage or bounds error
//   3 internal arithmetic / corrupt data

// Input outside the configured limits of an operation.
class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input (bad partition text, mismatched degrees, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exactness assertion failed (non-divisibility, negative multiplicity).
// This always signals an implementation bug, never bad user input.
class InternalArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Kronecker data for the requested degree has not been computed yet.
class PrecomputationRequiredError : public std::runtime_error {
 public:
  PrecomputationRequiredError(int n, const std::string& what)
      : std::runtime_error(what), n_(n) {}
  int needed_n() const { return n_; }

 private:
  int n_;
};

// A cache file was written by an incompatible format version.
class CacheVersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cache file failed validation; `line` is the 1-based offending line.
class CacheCorruptError : public std::runtime_error {
 public:
  CacheCorruptError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace liskron
