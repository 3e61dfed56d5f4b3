#pragma once

#include <map>

#include "qsl2/matrix.hpp"

namespace qsl2 {

/// The (m,n) block of the R-matrix on V_m (x) V_n, tensor index (a,c) with
/// the first factor outermost. The default evaluates
///   sum_s (qh - qh^-1)^s / [s]! * qh^{-s(s+1)/2}
///        * t^{H(x)H + sH(x)1 - 1(x)sH} (X^s (x) Y^s)
/// with qh = t^2; the literal variant uses qh = t^4 and denominator [s],
/// which fails the Yang-Baxter suite and is kept for comparison only.
struct RMatrixBlock {
  int m = 0, n = 0;
  Matrix matrix;
};

RMatrixBlock r_matrix(int m, int n, bool paper_literal = false);

/// R Delta(g) = Delta-op(g) R for g in {X, Y, K}, exact.
bool check_quasitriangular(int m, int n, bool paper_literal = false);

/// R12 R13 R23 = R23 R13 R12 on V_l1 (x) V_l2 (x) V_l3, exact.
bool check_ybe(int l1, int l2, int l3, bool paper_literal = false);

/// Drinfeld element u_m = sum coeff * S(E_cd) E_ab from the (m,m) block;
/// conjugation by u_m implements S^2 (= conjugation by K^2).
Matrix drinfeld_u(int m);

/// Ribbon scalar: v_m = u_m rho_m(K^-2) must be theta_m * I; returns theta_m.
Scalar ribbon_v(int m);

struct TwistTable {
  std::map<int, Scalar> theta;
};
TwistTable twist_table(int maxm);

/// Flip (x)-factors of V_m (x) V_n -> V_n (x) V_m as a permutation matrix.
Matrix flip_matrix(int m, int n);

} // namespace qsl2
