#pragma once

#include <stdexcept>

namespace circledom {

// Malformed text input in any of the file formats.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circledom
