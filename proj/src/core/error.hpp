#pragma once

#include <stdexcept>
#include <string>

namespace pw {

// Failure categories; the C API maps these 1:1 onto status codes.
enum class errc {
  domain = 1,       // state outside the admissible region (rho<=0, p+pi<=0, T<=0, ...)
  range = 2,        // query outside a table/curve coverage window
  bracket = 3,      // root bracketing found no (or no unique) sign change
  convergence = 4,  // iteration exceeded its budget
  parse = 5,        // malformed input text
  region = 6,       // state on the wrong side of the saturation line
  vacuum = 7,       // Riemann data generate vacuum
  degenerate = 8,   // expression denominator vanishes; refusing to guess
  invalid = 9,      // bad argument (null handle, n<2, inverted window, ...)
  internal = 10,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pw
