#pragma once

#include <stdexcept>
#include <string>

namespace hcoh {

enum class Errc {
  non_prime,
  bad_degree,
  field_too_large,
  zero_inverse,
  field_mismatch,
  index_out_of_range,
  dimension_mismatch,
  not_a_subspace,
  unsupported_degree,
  out_of_range,
  not_a_cocycle,
  parse_error,
  invalid_argument,
};

const char* to_string(Errc code) noexcept;

/// The single exception type thrown by the library; `code()` tells the failures apart.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hcoh
