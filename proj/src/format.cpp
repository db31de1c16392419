#include "qsep/format.hpp"

#include <cstdio>

namespace qsep {

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace qsep
