#include "binring/version.hpp"

namespace binring {

std::string_view version() { return BINRING_VERSION; }

}  // namespace binring
