#include "qsl2/ribbon.hpp"

#include <array>

#include "qsl2/coalgebra.hpp"
#include "qsl2/rep_kernel.hpp"

namespace qsl2 {

RMatrixBlock r_matrix(int m, int n, bool paper_literal) {
  const ExactOps ops;
  const auto rm = build_rep_t(ops, m);
  const auto rn = build_rep_t(ops, n);
  const int dm = m + 1, dn = n + 1;
  const int qexp = paper_literal ? 4 : 2; // qh = t^qexp
  const Scalar qh = Scalar::tpow(qexp);
  const Scalar qdiff = qh - qh.inverse();

  Matrix R(dm * dn);
  for (int s = 0; s <= std::min(m, n); ++s) {
    Scalar num(1);
    for (int k = 0; k < s; ++k) num *= qdiff;
    const Scalar den = s == 0 ? Scalar(1) : (paper_literal ? qint(s) : qfact(s));
    Scalar c = num / den;
    c *= Scalar::tpow(-qexp * s * (s + 1) / 2); // qh^{-s(s+1)/2}
    const Matrix xy = kron(rm.X.pow(s), rn.Y.pow(s));
    for (int a = 0; a < dm; ++a)
      for (int cidx = 0; cidx < dn; ++cidx) {
        const int hr = rep_weight(m, a), hc = rep_weight(n, cidx);
        const Scalar diag = Scalar::tpow(hr * hc + s * hr - s * hc);
        const int row = a * dn + cidx;
        for (int col = 0; col < dm * dn; ++col) {
          const Scalar& x = xy(row, col);
          if (!x.is_zero()) R(row, col) += c * diag * x;
        }
      }
  }
  return RMatrixBlock{m, n, std::move(R)};
}

bool check_quasitriangular(int m, int n, bool paper_literal) {
  const ExactOps ops;
  const Matrix R = r_matrix(m, n, paper_literal).matrix;
  for (char g : {'X', 'Y', 'K'}) {
    const Matrix d = coproduct_matrix(ops, m, n, g);
    const Matrix dop = coproduct_matrix(ops, m, n, g, /*opposite=*/true);
    if (!(R * d == dop * R)) return false;
  }
  return true;
}

namespace {

Matrix embed_pair(const Matrix& R, int pos, const std::array<int, 3>& dims) {
  const int d1 = dims[0], d2 = dims[1], d3 = dims[2];
  if (pos == 12) return kron(R, Matrix::identity(d3));
  if (pos == 23) return kron(Matrix::identity(d1), R);
  // pos == 13: identity on the middle factor
  Matrix M(d1 * d2 * d3);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d3; ++b)
      for (int ap = 0; ap < d1; ++ap)
        for (int bp = 0; bp < d3; ++bp) {
          const Scalar& v = R(a * d3 + b, ap * d3 + bp);
          if (v.is_zero()) continue;
          for (int c = 0; c < d2; ++c) M((a * d2 + c) * d3 + b, (ap * d2 + c) * d3 + bp) = v;
        }
  return M;
}

} // namespace

bool check_ybe(int l1, int l2, int l3, bool paper_literal) {
  const std::array<int, 3> dims{l1 + 1, l2 + 1, l3 + 1};
  const Matrix R12 = embed_pair(r_matrix(l1, l2, paper_literal).matrix, 12, dims);
  const Matrix R13 = embed_pair(r_matrix(l1, l3, paper_literal).matrix, 13, dims);
  const Matrix R23 = embed_pair(r_matrix(l2, l3, paper_literal).matrix, 23, dims);
  return R12 * R13 * R23 == R23 * R13 * R12;
}

Matrix drinfeld_u(int m) {
  const int d = m + 1;
  const Matrix R = r_matrix(m, m).matrix;
  const Matrix Q = antipode_matrix(m);
  const Matrix Qi = Q.inverse();
  Matrix u(d);
  // R = sum coeff E_ab (x) E_cd; u = sum coeff S(E_cd) E_ab
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          const Scalar& coeff = R(a * d + c, b * d + e);
          if (coeff.is_zero()) continue;
          Matrix Ecd(d), Eab(d);
          Ecd(c, e) = Scalar(1);
          Eab(a, b) = Scalar(1);
          u = u + ((Q * Ecd * Qi).transpose() * Eab).scaled(coeff);
        }
  return u;
}

Scalar ribbon_v(int m) {
  const auto rep = build_rep(m);
  const Matrix v = drinfeld_u(m) * rep.Kinv * rep.Kinv;
  const Scalar theta = v(0, 0);
  if (!(v == Matrix::identity(m + 1).scaled(theta)))
    throw std::domain_error("ribbon element is not scalar at level " + std::to_string(m));
  return theta;
}

TwistTable twist_table(int maxm) {
  TwistTable t;
  for (int m = 0; m <= maxm; ++m) t.theta[m] = ribbon_v(m);
  return t;
}

Matrix flip_matrix(int m, int n) {
  const int dm = m + 1, dn = n + 1;
  Matrix P(dm * dn);
  for (int a = 0; a < dm; ++a)
    for (int c = 0; c < dn; ++c) P(c * dm + a, a * dn + c) = Scalar(1);
  return P;
}

} // namespace qsl2
