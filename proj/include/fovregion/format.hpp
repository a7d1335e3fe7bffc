#pragma once

#include <string>

namespace fovregion {

// Six significant digits, shortest form ("%.6g"), with -0 printed as 0.
std::string fmt6(double v);

}  // namespace fovregion
