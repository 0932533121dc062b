#include "kmm/errors.hpp"

namespace kmm {

ParseError::ParseError(const std::string& what, std::size_t line)
    : ValidationError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace kmm
