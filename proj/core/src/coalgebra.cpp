#include "qsl2/coalgebra.hpp"

#include <mutex>

namespace qsl2 {

CGDecomposition tensor_decompose(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("levels must be nonnegative");
  return tensor_decompose_t(ExactOps{}, m, n);
}

GammaTable gamma_table(int m, int n) { return gamma_table_t(ExactOps{}, m, n); }

const GammaTable& gamma_table_cached(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GammaTable> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find({m, n});
  if (it == memo.end()) it = memo.emplace(std::make_pair(m, n), gamma_table(m, n)).first;
  return it->second;
}

namespace {

// images of the probe monomials {1, X, Y, K, XY, KX} at level r
std::vector<Matrix> probe_images(int r) {
  const auto rep = build_rep(r);
  return {Matrix::identity(r + 1), rep.X, rep.Y, rep.K, rep.X * rep.Y, rep.K * rep.X};
}

// (rho_m x rho_n)(Delta Z) for the same probes
std::vector<Matrix> probe_coproducts(int m, int n) {
  const ExactOps ops;
  const auto DX = coproduct_matrix(ops, m, n, 'X');
  const auto DY = coproduct_matrix(ops, m, n, 'Y');
  const auto DK = coproduct_matrix(ops, m, n, 'K');
  return {Matrix::identity((m + 1) * (n + 1)), DX, DY, DK, DX * DY, DK * DX};
}

} // namespace

bool validate_gamma(const GammaTable& tab) {
  const int m = tab.m, n = tab.n;
  const int dn = n + 1;
  const auto lhs = probe_coproducts(m, n);
  std::map<int, std::vector<Matrix>> rhs_images;
  for (const auto& [key, g] : tab.entries)
    if (!rhs_images.count(key.p)) rhs_images[key.p] = probe_images(key.p);

  for (std::size_t z = 0; z < lhs.size(); ++z) {
    Matrix expect = lhs[z];
    for (const auto& [key, g] : tab.entries) {
      const Scalar contrib = g * rhs_images.at(key.p)[z](key.u, key.v);
      expect(key.a * dn + key.c, key.b * dn + key.d) -= contrib;
    }
    if (!expect.is_zero()) return false;
  }
  return true;
}

CoeffComb dual_multiply(const MatrixCoeffIndex& f, const MatrixCoeffIndex& g) {
  const auto& tab = gamma_table_cached(f.m, g.m);
  CoeffComb out;
  for (const auto& [key, gamma] : tab.entries)
    if (key.a == f.a && key.b == f.b && key.c == g.a && key.d == g.b)
      out.push_back({MatrixCoeffIndex{key.p, key.u, key.v}, gamma});
  return out;
}

TensorElement delta_elem(const ElementaryIndex& e, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  TensorElement out;
  out.cap = cap;
  for (int m = 0; m <= cap; ++m)
    for (int n = 0; n <= cap; ++n) {
      if (e.m < std::abs(m - n) || e.m > m + n || (m + n - e.m) % 2 != 0) continue;
      const auto& tab = gamma_table_cached(m, n);
      Matrix blk((m + 1) * (n + 1));
      bool nonzero = false;
      for (const auto& [key, g] : tab.entries) {
        if (key.p != e.m || key.u != e.a || key.v != e.b) continue;
        blk(key.a * (n + 1) + key.c, key.b * (n + 1) + key.d) = g;
        nonzero = true;
      }
      if (nonzero) out.blocks.emplace(std::make_pair(m, n), std::move(blk));
    }
  return out;
}

Scalar counit(const TruncatedElement& z) {
  if (z.cap < 0) throw std::invalid_argument("empty truncated element");
  return z.blocks[0](0, 0);
}

Matrix antipode_matrix(int m) {
  const int d = m + 1;
  const auto rep = build_rep(m);
  const std::vector<std::pair<Matrix, Matrix>> constraints = {
      {rep.X.scaled(-Scalar::tpow(2)), rep.X},
      {rep.Y.scaled(-Scalar::tpow(-2)), rep.Y},
      {rep.Kinv, rep.K},
  };
  // rho(S(g))^T Q - Q rho(g) = 0, linear in the d^2 entries of Q
  Matrix sys(static_cast<int>(constraints.size()) * d * d, d * d);
  int row = 0;
  for (const auto& [sg, g] : constraints) {
    const Matrix sgt = sg.transpose();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j, ++row)
        for (int k = 0; k < d; ++k) {
          sys(row, k * d + j) += sgt(i, k);
          sys(row, i * d + k) -= g(k, j);
        }
  }
  auto ker = sys.nullspace();
  if (ker.size() != 1) throw std::domain_error("antipode solution space is not one-dimensional");
  Matrix Q(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Q(i, j) = ker[0][i * d + j];
  const Scalar norm = Q(0, m);
  if (norm.is_zero()) throw std::domain_error("antipode normalization entry vanished");
  return Q.scaled(norm.inverse());
}

TruncatedElement antipode(const TruncatedElement& z) {
  TruncatedElement out;
  out.cap = z.cap;
  for (int m = 0; m <= z.cap; ++m) {
    const Matrix Q = antipode_matrix(m);
    out.blocks.push_back((Q * z.blocks[m] * Q.inverse()).transpose());
  }
  return out;
}

bool hopf_axiom_check(const ElementaryIndex& e, int r) {
  const int d = r + 1;
  const Matrix Q = antipode_matrix(r);
  const Matrix Qi = Q.inverse();
  const auto& tab = gamma_table_cached(r, r);
  Matrix acc(d);
  for (const auto& [key, g] : tab.entries) {
    if (key.p != e.m || key.u != e.a || key.v != e.b) continue;
    Matrix Eab(d), Ecd(d);
    Eab(key.a, key.b) = Scalar(1);
    Ecd(key.c, key.d) = Scalar(1);
    const Matrix s_eab = (Q * Eab * Qi).transpose();
    acc = acc + (s_eab * Ecd).scaled(g);
  }
  Matrix expect(d);
  if (e.m == 0 && e.a == 0 && e.b == 0) expect = Matrix::identity(d);
  return acc == expect;
}

ClassicalLimitReport classical_limit_gamma(int m, int n, double eps) {
  ClassicalLimitReport rep;
  rep.m = m;
  rep.n = n;
  rep.eps = eps;
  const NumericOps quantum{Complex{1.0 + eps, 0.0}, false};
  const NumericOps classical{Complex{1.0, 0.0}, true};
  const auto tq = gamma_table_t(quantum, m, n);
  const auto tc = gamma_table_t(classical, m, n);
  std::map<GammaKey, Complex> merged;
  for (const auto& [k, v] : tq.entries) merged[k] += v;
  for (const auto& [k, v] : tc.entries) merged[k] -= v;
  for (const auto& [k, v] : merged) rep.max_dev = std::max(rep.max_dev, std::abs(v));
  rep.compared = merged.size();
  return rep;
}

} // namespace qsl2
