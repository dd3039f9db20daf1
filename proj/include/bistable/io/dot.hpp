#pragma once

#include <string>

#include "bistable/constraint/coupling_system.hpp"
#include "bistable/torsor/double_cover.hpp"

namespace bistable::io {

/// Constraint edges solid (opposing couplings red), free edges dashed.
[[nodiscard]] std::string system_to_dot(const CouplingSystem& sys);

/// Lifted vertices grouped by sheet; edges that cross sheets are red.
[[nodiscard]] std::string cover_to_dot(const DoubleCover& cover);

} // namespace bistable::io
