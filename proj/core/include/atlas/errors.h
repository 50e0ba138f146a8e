#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

// Raised when an input file or option is malformed. CLI maps this to exit 3.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structural invariant that the library promises fails to hold.
// CLI maps this to exit 2. Seeing one of these means a bug or bad table data,
// never a user mistake.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace atlas
