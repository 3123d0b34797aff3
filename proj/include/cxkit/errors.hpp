#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cxkit {

// Malformed user input: unknown descriptors, bad word letters, violated
// operation preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator permutation that fails to preserve the Coxeter matrix.
class CoxeterMatrixViolation : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration would exceed the configured size bound.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size bound for group/interval enumerations. Override with CXKIT_MAX_W.
inline std::uint64_t guard_limit() {
  if (const char* env = std::getenv("CXKIT_MAX_W")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) {
      return v;
    }
  }
  return 1'000'000;
}

}  // namespace cxkit
