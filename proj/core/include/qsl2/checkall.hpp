#pragma once

#include "qsl2/reps.hpp"

namespace qsl2 {

/// Aggregate invariant suite over levels 0..max_level: representation
/// relations, surjectivity witnesses, spectral projectors, coproduct tables,
/// Hopf axioms, quasi-triangularity, Yang-Baxter, ribbon data and braid
/// relations. Exact throughout.
CheckReport check_all(int max_level);

} // namespace qsl2
