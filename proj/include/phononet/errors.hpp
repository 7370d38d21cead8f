#pragma once

#include <stdexcept>
#include <string>

namespace phononet {

// Edge-list or generator-spec text that does not conform to the format.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit parse_error(const std::string& what) : std::runtime_error(what), line_(0) {}
  int line() const { return line_; }

private:
  int line_;
};

// Raised by every operation that requires a connected graph.
class disconnected_error : public std::runtime_error {
public:
  disconnected_error() : std::runtime_error("graph is disconnected") {}
  explicit disconnected_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-symmetric input, indefinite matrix, failed bracket.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phononet
