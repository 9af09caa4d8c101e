#ifndef WEYLKIT_ERRORS_HPP_
#define WEYLKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace weylkit {

// Malformed or inconsistent input (bad descriptor, invalid lattice, label
// not invariant, ...).  CLI exit status 2.
struct schema_error : std::runtime_error {
  explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration guard was exceeded.  CLI exit status 3.
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical consistency check failed (e.g. a user-supplied mirror set
// that is not stable under the isotropy group).  CLI exit status 4.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace weylkit

#endif  // WEYLKIT_ERRORS_HPP_
