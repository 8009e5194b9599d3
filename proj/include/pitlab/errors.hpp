#ifndef PITLAB_ERRORS_HPP
#define PITLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pitlab {

// Resource budget exhausted (expansion size, candidate search). Never a
// wrong verdict: callers surface it as INDETERMINATE.
struct ResourceExceeded : std::runtime_error {
  explicit ResourceExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& what, int line_, int col_ = 0)
      : std::runtime_error("line " + std::to_string(line_) +
                           (col_ ? ", col " + std::to_string(col_) : "") + ": " + what),
        line(line_),
        col(col_) {}
};

}  // namespace pitlab

#endif  // PITLAB_ERRORS_HPP
