#include "qsl2/truncated.hpp"

#include <set>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace qsl2 {

static void check_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
}

TruncatedElement TruncatedElement::zero(int cap) {
  check_cap(cap);
  TruncatedElement z;
  z.cap = cap;
  for (int m = 0; m <= cap; ++m) z.blocks.emplace_back(m + 1);
  return z;
}

TruncatedElement TruncatedElement::unit(int cap) {
  check_cap(cap);
  TruncatedElement z;
  z.cap = cap;
  for (int m = 0; m <= cap; ++m) z.blocks.push_back(Matrix::identity(m + 1));
  return z;
}

TruncatedElement theta(const PBWMonomial& mono, int cap) {
  check_cap(cap);
  TruncatedElement z;
  z.cap = cap;
  for (int m = 0; m <= cap; ++m) z.blocks.push_back(pbw_image(mono, m));
  return z;
}

TruncatedElement theta(const MonoComb& comb, int cap) {
  TruncatedElement z = TruncatedElement::zero(cap);
  for (const auto& [mono, c] : comb) z = trunc_add(z, trunc_scale(theta(mono, cap), c));
  return z;
}

TruncatedElement elementary_element(const ElementaryIndex& e, int cap) {
  TruncatedElement z = TruncatedElement::zero(cap);
  if (e.m > cap) throw std::invalid_argument("elementary level exceeds cap");
  z.blocks[e.m](e.a, e.b) = Scalar(1);
  return z;
}

static void check_caps(const TruncatedElement& x, const TruncatedElement& y) {
  if (x.cap != y.cap) throw std::invalid_argument("truncation cap mismatch");
}

TruncatedElement trunc_add(const TruncatedElement& x, const TruncatedElement& y) {
  check_caps(x, y);
  TruncatedElement z;
  z.cap = x.cap;
  for (int m = 0; m <= x.cap; ++m) z.blocks.push_back(x.blocks[m] + y.blocks[m]);
  return z;
}

TruncatedElement trunc_mul(const TruncatedElement& x, const TruncatedElement& y) {
  check_caps(x, y);
  TruncatedElement z;
  z.cap = x.cap;
  for (int m = 0; m <= x.cap; ++m) z.blocks.push_back(x.blocks[m] * y.blocks[m]);
  return z;
}

TruncatedElement trunc_scale(const TruncatedElement& x, const Scalar& c) {
  TruncatedElement z;
  z.cap = x.cap;
  for (int m = 0; m <= x.cap; ++m) z.blocks.push_back(x.blocks[m].scaled(c));
  return z;
}

Scalar pair_coeff(const MatrixCoeffIndex& idx, const TruncatedElement& z) {
  if (idx.m > z.cap) throw std::invalid_argument("coefficient level exceeds cap");
  return z.blocks[idx.m](idx.a, idx.b);
}

TruncatedElement cmn_element(int m, int n, int cap) {
  if (m == n) throw std::invalid_argument("C_{m,n} requires m != n");
  check_cap(cap);
  const Scalar lm = casimir_eigenvalue(m), ln = casimir_eigenvalue(n);
  const Scalar gap = lm - ln;
  TruncatedElement z;
  z.cap = cap;
  for (int r = 0; r <= cap; ++r) {
    const Scalar c = (casimir_eigenvalue(r) - ln) / gap;
    z.blocks.push_back(Matrix::identity(r + 1).scaled(c));
  }
  return z;
}

TruncatedElement dmn_element(int m, int N, int cap, bool include_level0) {
  if (m > N) throw std::invalid_argument("D_{m,N} requires m <= N");
  if (cap < N) throw std::invalid_argument("cap must be at least N");
  TruncatedElement z = TruncatedElement::unit(cap);
  for (int n = include_level0 ? 0 : 1; n <= N; ++n) {
    if (n == m) continue;
    z = trunc_mul(z, cmn_element(m, n, cap));
  }
  return z;
}

int rank_cap_rule(const std::vector<PBWMonomial>& monos) {
  int maxnp = 0;
  std::set<int> kexps;
  for (const auto& mo : monos) {
    maxnp = std::max(maxnp, mo.n + mo.p);
    kexps.insert(mo.kexp);
  }
  return maxnp + static_cast<int>(kexps.size());
}

RankReport pbw_independence_rank(const std::vector<PBWMonomial>& monos, int cap, Complex t0,
                                 double threshold, bool exact) {
  check_cap(cap);
  const int count = static_cast<int>(monos.size());
  int cols = 0;
  for (int m = 0; m <= cap; ++m) cols += (m + 1) * (m + 1);

  RankReport rep;
  rep.count = count;
  rep.exact_mode = exact;
  if (exact) {
    Matrix rowsm(count, cols);
    for (int r = 0; r < count; ++r) {
      int c = 0;
      for (int m = 0; m <= cap; ++m) {
        const Matrix img = pbw_image(monos[r], m);
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j <= m; ++j) rowsm(r, c++) = img(i, j);
      }
    }
    rep.rank = rowsm.rref();
  } else {
    if (!numeric_t0_admissible(t0, 2 * (cap + 2)))
      throw std::invalid_argument("t0 fails the root-of-unity guard");
    Eigen::MatrixXcd A(count, cols);
    for (int r = 0; r < count; ++r) {
      int c = 0;
      for (int m = 0; m <= cap; ++m) {
        const Matrix img = pbw_image(monos[r], m);
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j <= m; ++j) A(r, c++) = img(i, j).eval(t0);
      }
    }
    // rows span wildly different magnitudes across levels; normalize each so
    // the relative singular-value threshold measures direction, not size
    for (int r = 0; r < count; ++r) {
      const double norm = A.row(r).norm();
      if (norm > 0.0) A.row(r) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    const auto& sv = svd.singularValues();
    const double top = sv.size() ? sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (top > 0.0 && sv(i) / top > threshold) ++rank;
    rep.rank = rank;
  }
  rep.full_rank = rep.rank == count;
  return rep;
}

} // namespace qsl2
