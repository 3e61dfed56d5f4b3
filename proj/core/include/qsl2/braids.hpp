#pragma once

#include "qsl2/matrix.hpp"

namespace qsl2 {

/// Braid word on s strands; letters are nonzero integers g with |g| <= s-1,
/// sign giving the crossing sign.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;
};

/// Product of R-hat = P.R(m,m) operators (inverse for negative letters)
/// on V_m^{(x)s}.
Matrix braid_matrix(const BraidWord& w, int m);

/// Trace of (mu^{(x)s}) M with the pivotal element mu = rho_m(K^2).
Scalar quantum_trace(const Matrix& M, int strands, int m);

struct InvariantResult {
  Scalar raw;
  int writhe = 0;
  Scalar corrected;     // raw * theta_m^{writhe}
  Scalar normalization; // unknot value tr(mu)
  Scalar normalized;    // corrected / normalization
};

InvariantResult link_invariant(const BraidWord& w, int m);

} // namespace qsl2
