#pragma once

#include <stdexcept>
#include <string>

namespace bhc {

// Error codes shared by the C++ core and the C API (see bhc.h, which mirrors
// these values as BHC_E_* constants).
enum class Errc : int {
  ok = 0,
  division_by_zero = 1,
  field_mismatch = 2,
  space_mismatch = 3,
  object_not_in_category = 4,
  not_a_morphism = 5,
  precondition_failed = 6,
  host_mismatch = 7,
  induced_map_undefined = 8,
  restriction_undefined = 9,
  degree_out_of_range = 10,
  calibration_failed = 11,
  unsupported_mode = 12,
  truncation_overflow = 13,
  truncation_too_small = 14,
  unknown_name = 15,
  verification_failed = 16,
  parse_error = 17,
  invalid_argument = 18,
  io_error = 19,
  cap_exceeded = 20,
  internal = 99,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bhc
