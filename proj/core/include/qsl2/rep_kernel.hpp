#pragma once

#include "qsl2/matrix.hpp"

namespace qsl2 {

/// Scalar-domain policy for the representation/Clebsch-Gordan pipeline.
/// ExactOps computes in Q(t); NumericOps at a fixed complex t0, optionally
/// with the classical specialization [n] -> n at t = 1.
struct ExactOps {
  using S = Scalar;
  S qint(int n) const { return ::qsl2::qint(n); }
  S tpow(int e) const { return Scalar::tpow(e); }
  S integer(long n) const { return Scalar(n); }
};

struct NumericOps {
  using S = Complex;
  Complex t0{1.3, 0.0};
  bool classical = false;

  S qint(int n) const {
    if (classical) return {static_cast<double>(n), 0.0};
    S acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) acc += std::pow(t0, 2 * n - 2 - 4 * k);
    return acc;
  }
  S tpow(int e) const { return classical ? S{1.0, 0.0} : std::pow(t0, e); }
  S integer(long n) const { return {static_cast<double>(n), 0.0}; }
};

template <class Ops>
struct RepT {
  int m = 0;
  Mat<typename Ops::S> X, Y, K, Kinv, H;
};

/// Weight of basis vector e_a at level m (eigenvalue of H).
inline int rep_weight(int m, int a) { return 2 * a - m; }

/// rho_m on generators: X on the first subdiagonal with entries [1..m],
/// Y on the first superdiagonal with [m..1], K = diag(t^{2a-m}).
template <class Ops>
RepT<Ops> build_rep_t(const Ops& ops, int m) {
  using S = typename Ops::S;
  const int d = m + 1;
  RepT<Ops> r{m, Mat<S>(d), Mat<S>(d), Mat<S>(d), Mat<S>(d), Mat<S>(d)};
  for (int a = 0; a < d; ++a) {
    r.K(a, a) = ops.tpow(rep_weight(m, a));
    r.Kinv(a, a) = ops.tpow(-rep_weight(m, a));
    r.H(a, a) = ops.integer(rep_weight(m, a));
  }
  for (int a = 0; a < m; ++a) {
    r.X(a + 1, a) = ops.qint(a + 1);
    r.Y(a, a + 1) = ops.qint(m - a);
  }
  return r;
}

/// (rho_m x rho_n) of Delta(g), g in {X, Y, K}:
/// Delta(X) = X(x)K + K^{-1}(x)X, same shape for Y, Delta(K) = K(x)K.
template <class Ops>
Mat<typename Ops::S> coproduct_matrix(const Ops& ops, int m, int n, char g, bool opposite = false) {
  const auto rm = build_rep_t(ops, m);
  const auto rn = build_rep_t(ops, n);
  switch (g) {
    case 'X':
      return opposite ? kron(rm.K, rn.X) + kron(rm.X, rn.Kinv)
                      : kron(rm.X, rn.K) + kron(rm.Kinv, rn.X);
    case 'Y':
      return opposite ? kron(rm.K, rn.Y) + kron(rm.Y, rn.Kinv)
                      : kron(rm.Y, rn.K) + kron(rm.Kinv, rn.Y);
    case 'K':
      return kron(rm.K, rn.K);
    default:
      throw std::invalid_argument("generator must be X, Y or K");
  }
}

template <class Ops>
struct CGDecompositionT {
  int m = 0, n = 0;
  std::vector<int> components; // |m-n|, |m-n|+2, ..., m+n
  Mat<typename Ops::S> A, Ainv;
  int component_offset(int q) const {
    int off = 0;
    for (int c : components) {
      if (c == q) return off;
      off += c + 1;
    }
    throw std::invalid_argument("q is not a component of this decomposition");
  }
};

/// Clebsch-Gordan change of basis: for each component q, the highest-weight
/// vector is the kernel of Delta(X) on the weight-q subspace (normalized so
/// its lexicographically first nonzero coordinate is 1), and lower vectors
/// follow by f_{i-1} = Delta(Y) f_i / [q/2 - i + 1].
template <class Ops>
CGDecompositionT<Ops> tensor_decompose_t(const Ops& ops, int m, int n) {
  using S = typename Ops::S;
  CGDecompositionT<Ops> cg;
  cg.m = m;
  cg.n = n;
  for (int q = std::abs(m - n); q <= m + n; q += 2) cg.components.push_back(q);

  const int T = (m + 1) * (n + 1);
  const auto DX = coproduct_matrix(ops, m, n, 'X');
  const auto DY = coproduct_matrix(ops, m, n, 'Y');
  const auto wt = [&](int idx) { return rep_weight(m, idx / (n + 1)) + rep_weight(n, idx % (n + 1)); };

  cg.A = Mat<S>(T);
  int col = 0;
  for (int q : cg.components) {
    // indices of the weight-q subspace, in lexicographic (a,c) order
    std::vector<int> wq;
    for (int idx = 0; idx < T; ++idx)
      if (wt(idx) == q) wq.push_back(idx);
    // kernel of DX restricted to that subspace
    Mat<S> sub(T, static_cast<int>(wq.size()));
    for (int j = 0; j < static_cast<int>(wq.size()); ++j)
      for (int i = 0; i < T; ++i) sub(i, j) = DX(i, wq[j]);
    auto ker = sub.nullspace();
    if (ker.size() != 1)
      throw std::domain_error("highest-weight kernel is not one-dimensional at component q=" +
                              std::to_string(q));
    std::vector<S> hw(T, FieldTraits<S>::zero());
    for (size_t j = 0; j < wq.size(); ++j) hw[wq[j]] = ker[0][j];
    // normalize: lexicographically first nonzero coordinate equals 1
    S lead = FieldTraits<S>::zero();
    for (int idx = 0; idx < T; ++idx)
      if (!FieldTraits<S>::is_zero(hw[idx])) {
        lead = hw[idx];
        break;
      }
    for (auto& x : hw) x /= lead;

    // generate the component top-down, store columns bottom-up (e_{-q/2} first)
    std::vector<std::vector<S>> vecs(q + 1);
    vecs[q] = hw;
    for (int r = q; r > 0; --r) {
      // f at position r corresponds to i = r - q/2 (offset index r in 0..q)
      std::vector<S> nxt(T, FieldTraits<S>::zero());
      for (int i = 0; i < T; ++i) {
        S acc = FieldTraits<S>::zero();
        for (int j = 0; j < T; ++j)
          if (!FieldTraits<S>::is_zero(DY(i, j))) acc += DY(i, j) * vecs[r][j];
        nxt[i] = acc;
      }
      const S denom = ops.qint(q - r + 1); // [q/2 - i + 1] with i = r - q/2
      for (auto& x : nxt) x /= denom;
      vecs[r - 1] = std::move(nxt);
    }
    for (int r = 0; r <= q; ++r, ++col)
      for (int i = 0; i < T; ++i) cg.A(i, col) = vecs[r][i];
  }
  cg.Ainv = cg.A.inverse();
  return cg;
}

struct GammaKey {
  int a, b, c, d; // matrix-coefficient indices at levels m and n
  int p, u, v;    // target coefficient (p, u, v)
  auto operator<=>(const GammaKey&) const = default;
};

template <class Ops>
struct GammaTableT {
  int m = 0, n = 0;
  std::map<GammaKey, typename Ops::S> entries;
};

/// Structure constants of Eq-style products of matrix coefficients:
/// gamma = A[(a,c),(p,u)] * Ainv[(p,v),(b,d)].
template <class Ops>
GammaTableT<Ops> gamma_table_t(const Ops& ops, int m, int n) {
  using S = typename Ops::S;
  const auto cg = tensor_decompose_t(ops, m, n);
  GammaTableT<Ops> tab;
  tab.m = m;
  tab.n = n;
  const int dn = n + 1;
  for (int a = 0; a <= m; ++a)
    for (int c = 0; c <= n; ++c)
      for (int b = 0; b <= m; ++b)
        for (int d = 0; d <= n; ++d)
          for (int q : cg.components) {
            const int off = cg.component_offset(q);
            for (int u = 0; u <= q; ++u)
              for (int v = 0; v <= q; ++v) {
                const S g = cg.A(a * dn + c, off + u) * cg.Ainv(off + v, b * dn + d);
                if (!FieldTraits<S>::is_zero(g))
                  tab.entries[GammaKey{a, b, c, d, q, u, v}] += g;
              }
          }
  // drop exact zeros produced by accumulation
  for (auto it = tab.entries.begin(); it != tab.entries.end();)
    it = FieldTraits<S>::is_zero(it->second) ? tab.entries.erase(it) : std::next(it);
  return tab;
}

} // namespace qsl2
