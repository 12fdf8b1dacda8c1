#pragma once

#include <stdexcept>
#include <string>

namespace convexoid {

// Base for violated preconditions and malformed structures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unparseable text or a name that does not resolve. Carries an optional line.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace convexoid
