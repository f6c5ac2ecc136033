#pragma once

#include <cmath>

namespace fairbook {

// Round half away from zero to `places` decimal digits, matching how the
// source tables print values.
inline double round_half_up(double value, int places) {
    double scale = std::pow(10.0, places);
    return std::round(value * scale) / scale;
}

}  // namespace fairbook
