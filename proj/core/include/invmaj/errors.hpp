#pragma once

#include <stdexcept>
#include <string>

namespace invmaj {

// A caller handed us data that violates an operation's stated precondition.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// The data was well-formed but lies outside the domain/image of a bijection
// (e.g. a code that no filling maps to).  The CLI reports the two differently.
struct not_in_image_error : std::runtime_error {
  explicit not_in_image_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace invmaj
