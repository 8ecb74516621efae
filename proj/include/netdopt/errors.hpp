#pragma once

#include <stdexcept>
#include <string>

namespace netdopt {

// Input text could not be parsed. line() is 1-based, or -1 when unknown.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg, int line = -1)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The information matrix of the requested fit/criterion is singular
// (typically a design confounded with the intercept).
class singular_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No assignment satisfies the balance constraint.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netdopt
