#pragma once

#include "salem/error.hpp"
#include "salem/factorint.hpp"
#include "salem/latiso.hpp"
#include "salem/logbounds.hpp"
#include "salem/matrix.hpp"
#include "salem/polyarith.hpp"
#include "salem/realroots.hpp"
#include "salem/salemclass.hpp"
#include "salem/spectra.hpp"

namespace salem {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace salem
