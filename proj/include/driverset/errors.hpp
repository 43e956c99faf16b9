#pragma once

#include <stdexcept>
#include <string>

namespace driverset {

// Raised when an input exceeds a configured resource cap (dimension or
// search limits), as opposed to being malformed.  Malformed inputs throw
// std::invalid_argument.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace driverset
