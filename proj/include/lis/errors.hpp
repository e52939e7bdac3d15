#pragma once

#include <stdexcept>
#include <string>

namespace lis {

// Input text could not be read at all (bad syntax, wrong version line, ...).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : std::move(msg)),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input parsed but violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lis
