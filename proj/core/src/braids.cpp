#include "qsl2/braids.hpp"

#include <numeric>

#include "qsl2/reps.hpp"
#include "qsl2/ribbon.hpp"

namespace qsl2 {

Matrix braid_matrix(const BraidWord& w, int m) {
  if (w.strands < 1) throw std::invalid_argument("braid needs at least one strand");
  const int d = m + 1;
  int dim = 1;
  for (int i = 0; i < w.strands; ++i) dim *= d;
  const Matrix rhat = flip_matrix(m, m) * r_matrix(m, m).matrix;
  const Matrix rhat_inv = rhat.inverse();

  Matrix M = Matrix::identity(dim);
  for (int g : w.word) {
    const int i = std::abs(g);
    if (i < 1 || i > w.strands - 1) throw std::invalid_argument("braid generator out of range");
    int left = 1, right = 1;
    for (int k = 0; k < i - 1; ++k) left *= d;
    for (int k = 0; k < w.strands - i - 1; ++k) right *= d;
    const Matrix op = kron(kron(Matrix::identity(left), g > 0 ? rhat : rhat_inv),
                           Matrix::identity(right));
    M = M * op;
  }
  return M;
}

Scalar quantum_trace(const Matrix& M, int strands, int m) {
  const int d = m + 1;
  int dim = 1;
  for (int i = 0; i < strands; ++i) dim *= d;
  if (M.rows() != dim || M.cols() != dim)
    throw std::invalid_argument("matrix size does not match (m+1)^strands");
  const auto rep = build_rep(m);
  Matrix mu = rep.K * rep.K; // pivotal element K^2
  Matrix mus = Matrix::identity(1);
  for (int i = 0; i < strands; ++i) mus = kron(mus, mu);
  return (mus * M).trace();
}

InvariantResult link_invariant(const BraidWord& w, int m) {
  InvariantResult res;
  res.raw = quantum_trace(braid_matrix(w, m), w.strands, m);
  res.writhe = std::accumulate(w.word.begin(), w.word.end(), 0,
                               [](int acc, int g) { return acc + (g > 0 ? 1 : -1); });
  const Scalar theta = ribbon_v(m);
  Scalar tw(1);
  for (int i = 0; i < std::abs(res.writhe); ++i) tw *= theta;
  if (res.writhe < 0) tw = tw.inverse();
  res.corrected = res.raw * tw;
  res.normalization = quantum_trace(Matrix::identity(m + 1), 1, m);
  res.normalized = res.corrected / res.normalization;
  return res;
}

} // namespace qsl2
