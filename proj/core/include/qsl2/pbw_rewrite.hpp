#pragma once

#include "qsl2/reps.hpp"

namespace qsl2 {

enum class Gen { X, Y, K, Kinv };

/// Normal-order a word in the generators into a combination of PBW
/// monomials, using KX = t^2 XK, KY = t^-2 YK and
/// XY - YX = (K^2 - K^-2)/(t^2 - t^-2).
MonoComb rewrite_word(const std::vector<Gen>& word);

/// Product of two PBW monomials as a PBW combination.
MonoComb mono_product(const PBWMonomial& a, const PBWMonomial& b);

/// Sum of combinations with zero-pruning.
MonoComb comb_add(const MonoComb& a, const MonoComb& b);
MonoComb comb_scale(const MonoComb& a, const Scalar& c);
MonoComb comb_product(const MonoComb& a, const MonoComb& b);

std::vector<Gen> mono_to_word(const PBWMonomial& m);

} // namespace qsl2
