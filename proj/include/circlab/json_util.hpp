#pragma once

#include <json.hpp>

#include "circlab/count.hpp"

namespace circlab {

// Counts render as JSON numbers while they fit in 64 bits, as exact decimal
// strings beyond that.
inline nlohmann::ordered_json count_json(const Count& c) {
  if (c.fits_u64()) return c.as_u64();
  return c.str();
}

}  // namespace circlab
