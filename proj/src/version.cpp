#include "ribbon/version.hpp"

#ifndef RIBBON_VERSION
#define RIBBON_VERSION "unknown"
#endif

namespace ribbon {

std::string_view version() { return RIBBON_VERSION; }

}  // namespace ribbon
