#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dispnet {

enum class Errc {
  singular,
  dimension_mismatch,
  non_prime_base,
  out_of_range,
  unsupported_base,
  not_fibonacci,
  grid_mismatch,
  empty_set,
  too_large,
  not_permutation_structured,
  domain_error,
  invalid_argument,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library is reported through this type; the code lets
// callers (and the CLI) distinguish input problems from math preconditions.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dispnet
