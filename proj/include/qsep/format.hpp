#pragma once

#include <string>

namespace qsep {

// Shortest decimal form that preserves 12 significant digits ("%.12g").
// Locale-independent; used for every CSV/JSON/table number we emit so that
// repeated runs produce byte-identical artifacts.
std::string format_g12(double v);

}  // namespace qsep
