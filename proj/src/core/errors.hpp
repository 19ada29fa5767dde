#pragma once

#include <stdexcept>
#include <string>

namespace ntz {

enum class Errc {
  invalid_argument,
  unsupported_regime,   // |b| <= 2: no real root pair
  index_out_of_range,
  singular_matrix,
  overflow,
  case_out_of_scope,
  unbounded_range,
  diverged,
  scale_cap,            // dense oracle refuses n beyond its O(n^3) budget
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ntz
