#pragma once

#include <stdexcept>
#include <string>

namespace esat {

// Single exception type for all user-facing failures (parse errors, bad
// arguments, contract violations). The C API layer turns these into error
// codes plus a retrievable message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace esat
