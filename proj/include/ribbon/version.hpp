#pragma once

#include <string_view>

namespace ribbon {

// git describe of the source tree at configure time
std::string_view version();

}  // namespace ribbon
