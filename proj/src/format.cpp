#include "fovregion/format.hpp"

#include <cstdio>

namespace fovregion {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace fovregion
