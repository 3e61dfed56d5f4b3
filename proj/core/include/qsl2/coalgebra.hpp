#pragma once

#include <map>

#include "qsl2/rep_kernel.hpp"
#include "qsl2/truncated.hpp"

namespace qsl2 {

using CGDecomposition = CGDecompositionT<ExactOps>;
using GammaTable = GammaTableT<ExactOps>;

/// V_m (x) V_n = direct sum of V_q, q = |m-n|, |m-n|+2, ..., m+n, with the
/// exact change of basis A and its inverse.
CGDecomposition tensor_decompose(int m, int n);

GammaTable gamma_table(int m, int n);
/// Memoized variant; tables are shared, computed once per (m,n).
const GammaTable& gamma_table_cached(int m, int n);

/// The validation identity behind Eq-gammas: for each probe monomial Z in
/// {1, X, Y, K, XY, KX}, [(rho_m x rho_n)(Delta Z)]_{(a,c),(b,d)} equals
/// sum gamma * rho_p(Z)[u,v], exactly, at every index tuple.
bool validate_gamma(const GammaTable& tab);

using CoeffComb = std::vector<std::pair<MatrixCoeffIndex, Scalar>>;
CoeffComb dual_multiply(const MatrixCoeffIndex& f, const MatrixCoeffIndex& g);

/// Element of the completed tensor square, blockwise; missing blocks are zero.
struct TensorElement {
  int cap = -1;
  std::map<std::pair<int, int>, Matrix> blocks;
  Matrix block(int m, int n) const {
    auto it = blocks.find({m, n});
    return it == blocks.end() ? Matrix((m + 1) * (n + 1)) : it->second;
  }
};

/// Delta(e_{a,b}(q)) truncated to blocks (m,n) with m,n <= cap; block (m,n)
/// entry ((a',c'),(b',d')) is gamma^{(a',b',m),(c',d',n)}_{(a,b,q)}.
TensorElement delta_elem(const ElementaryIndex& e, int cap);

/// epsilon = the level-0 coefficient (rho_0 realizes the counit).
Scalar counit(const TruncatedElement& z);

/// Weight-reversal matrix Q_m implementing the antipode levelwise:
/// rho_m(S(g))^T Q_m = Q_m rho_m(g) for g in {X, Y, K}, normalized so
/// Q_m(0, m) = 1. antipode acts by M -> (Q M Q^-1)^T on each block.
Matrix antipode_matrix(int m);
TruncatedElement antipode(const TruncatedElement& z);

/// Level-r block of mu(S x id)Delta = eta.epsilon on e: exact pass/fail.
bool hopf_axiom_check(const ElementaryIndex& e, int r);

struct ClassicalLimitReport {
  int m = 0, n = 0;
  double eps = 0.0;
  double max_dev = 0.0;
  std::size_t compared = 0;
};

/// Numeric gamma at t0 = 1 + eps against the classical ([k] -> k, t = 1)
/// pipeline; reports the maximum absolute deviation over all entries.
ClassicalLimitReport classical_limit_gamma(int m, int n, double eps);

} // namespace qsl2
