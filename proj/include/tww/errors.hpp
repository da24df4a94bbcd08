#pragma once

#include <stdexcept>

namespace tww {

// A maintained invariant broke: always a bug in this code base, never a
// consequence of bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tww
