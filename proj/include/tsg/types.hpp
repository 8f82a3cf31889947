#pragma once

#include <cstdint>

namespace tsg {

using index_t = std::int64_t;
using value_t = double;

} // namespace tsg
