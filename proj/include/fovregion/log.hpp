#pragma once

#include <spdlog/spdlog.h>

namespace fovregion {

// Library logger, writes to stderr. Level comes from FOVREGION_LOG
// (trace, debug, info, warn, error, off); default warn.
spdlog::logger& log();

}  // namespace fovregion
