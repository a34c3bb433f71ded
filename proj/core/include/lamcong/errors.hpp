#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamcong {

// Malformed term text. `position` is a byte offset into the input.
struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Malformed derivation or environment file. `location` is a JSON-pointer-like path.
struct FormatError : std::runtime_error {
  FormatError(std::string location, const std::string& what)
      : std::runtime_error(what + " (at " + location + ")"), location(std::move(location)) {}
  std::string location;
};

// A script was instantiated with bindings that violate a side condition of its
// construction (e.g. two schematic variables required to be distinct coincide).
struct BindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lamcong
