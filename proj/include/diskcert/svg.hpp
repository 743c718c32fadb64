#pragma once

#include <string>

#include "diskcert/pipeline.hpp"

namespace diskcert {

// Pixels per cell side in emitted drawings.
inline constexpr int kSvgCellPixels = 32;

// Cells, extras, and either gamma plus boundary marks coloured by their
// circle parameter (disk) or failure annotations (anything else).
std::string emit_svg(const Certificate& cert);

}  // namespace diskcert
