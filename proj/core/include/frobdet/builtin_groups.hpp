#pragma once

#include "frobdet/group.hpp"

namespace frobdet {

/// Bundled groups: "z1".."z8" (cyclic), "klein", "s3", "d4", "q8".
FiniteGroup builtin_group(const std::string& name);

/// Names of all bundled groups in a fixed order.
const std::vector<std::string>& builtin_group_names();

} // namespace frobdet
