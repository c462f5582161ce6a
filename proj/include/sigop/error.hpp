// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sigop {

enum class errc : int {
  ok = 0,
  invalid_argument = 1,
  grid_mismatch = 2,
  domain_violation = 3,
  singular = 4,
  convergence = 5,
  tail_bound = 6,
  profile_too_wide = 7,
  out_of_range = 8,
  not_embedded = 9,
  io = 10,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace sigop
