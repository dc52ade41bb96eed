#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Library-wide error taxonomy. The CLI maps these onto exit codes, so new
// kinds should be added here rather than throwing ad-hoc exception types.
enum class Errc {
  invalid_argument,
  domain_mismatch,
  degree_mismatch,
  range,
  overflow,
  unsupported_characteristic,
  configuration,      // unsatisfiable modulus congruence and similar
  degenerate_input,   // e.g. repeated roots where distinct ones are required
  inconsistent_system,
  parse,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace waring
