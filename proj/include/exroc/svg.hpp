#pragma once

#include <string>

#include "exroc/roc.hpp"

namespace exroc {

/// Standalone SVG 1.1 document: the ROC polyline, the chance diagonal and
/// ticks at 0, 1/2 and 1 on both axes. Square canvas of `width_px` >= 64.
std::string emit_curve_svg(const RocCurve& c, int width_px);

}  // namespace exroc
