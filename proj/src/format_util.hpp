#pragma once

#include <cstdio>
#include <string>

namespace dofw {

// 17 significant digits: round-trip exact for IEEE doubles.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace dofw
