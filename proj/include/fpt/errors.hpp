#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpt {

// Every failure raised by the toolkit derives from fpt::error so callers
// (the CLI in particular) can map the whole family to one exit status.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. line() is 1-based, 0 when unknown.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A vertex / element id outside its universe.
class range_error : public error {
 public:
  using error::error;
};

// Structural invariant violated (self-loop, duplicate, ...).
class validity_error : public error {
 public:
  using error::error;
};

// Bad numeric parameter (infeasible edge count, delta outside (0,1), ...).
class parameter_error : public error {
 public:
  using error::error;
};

// Instance exceeds a configured size cap.
class size_error : public error {
 public:
  using error::error;
};

// Input outside the domain of an operation (disconnected graph for Max-Leaf, ...).
class domain_error : public error {
 public:
  using error::error;
};

// Caller broke a documented precondition, or a plugin returned an
// inconsistent answer.
class contract_error : public error {
 public:
  using error::error;
};

}  // namespace fpt
