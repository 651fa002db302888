#pragma once

#include <string_view>

namespace binring {

std::string_view version();

}  // namespace binring
