#pragma once

// Outward-rounded rational enclosures of natural logarithms.

#include "salem/polyarith.hpp"

namespace salem {

/// Enclosure of ln(x) for rational x > 0 with width below 2^-bits.
/// Argument reduction to [1, 2) by powers of two, then the series
/// ln y = 2 atanh((y-1)/(y+1)) with an explicit geometric tail bound.
RatInterval log_enclosure(const Rational& x, unsigned bits);

/// Enclosure of ln(v) for every v in iv (iv.lo > 0).
RatInterval log_enclosure(const RatInterval& iv, unsigned bits);

}  // namespace salem
