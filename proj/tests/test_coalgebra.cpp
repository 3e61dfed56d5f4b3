#include <doctest.h>

#include "qsl2/coalgebra.hpp"
#include "qsl2/pbw_rewrite.hpp"

using namespace qsl2;

namespace {

Matrix block_diag_rep(const CGDecomposition& cg, char g) {
  int T = 0;
  for (int q : cg.components) T += q + 1;
  Matrix out(T);
  const ExactOps ops;
  for (int q : cg.components) {
    const auto r = build_rep_t(ops, q);
    const Matrix& gm = g == 'X' ? r.X : g == 'Y' ? r.Y : r.K;
    const int off = cg.component_offset(q);
    for (int i = 0; i <= q; ++i)
      for (int j = 0; j <= q; ++j) out(off + i, off + j) = gm(i, j);
  }
  return out;
}

// extend the dual product bilinearly to combinations
CoeffComb comb_mul(const CoeffComb& f, const CoeffComb& g) {
  std::map<MatrixCoeffIndex, Scalar> acc;
  for (const auto& [fi, fc] : f)
    for (const auto& [gi, gc] : g)
      for (const auto& [hi, hc] : dual_multiply(fi, gi)) acc[hi] += fc * gc * hc;
  CoeffComb out;
  for (auto& [idx, c] : acc)
    if (!c.is_zero()) out.push_back({idx, c});
  return out;
}

} // namespace

TEST_CASE("tensor decomposition of two level-1 factors") {
  const auto cg = tensor_decompose(1, 1);
  REQUIRE(cg.components == std::vector<int>{0, 2});
  // singlet vector e0 (x) e1 - t^2 e1 (x) e0, leading coordinate normalized
  const int off = cg.component_offset(0);
  CHECK(cg.A(0, off).is_zero());
  CHECK(cg.A(1, off).is_one());
  CHECK(cg.A(2, off) == -Scalar::tpow(2));
  CHECK(cg.A(3, off).is_zero());
}

TEST_CASE("change of basis intertwines the generators") {
  for (int m = 0; m <= 3; ++m)
    for (int n = m; n <= 3; ++n) {
      const auto cg = tensor_decompose(m, n);
      int T = 0;
      for (int q : cg.components) T += q + 1;
      CHECK(T == (m + 1) * (n + 1));
      const ExactOps ops;
      for (char g : {'X', 'Y', 'K'})
        CHECK(cg.Ainv * coproduct_matrix(ops, m, n, g) * cg.A == block_diag_rep(cg, g));
    }
}

TEST_CASE("gamma tables satisfy the validation identity") {
  for (int m = 0; m <= 2; ++m)
    for (int n = m; n <= 2; ++n) CHECK(validate_gamma(gamma_table(m, n)));
}

TEST_CASE("memoized gamma lookup returns the same table") {
  const auto& a = gamma_table_cached(1, 2);
  const auto& b = gamma_table_cached(1, 2);
  CHECK(&a == &b);
  CHECK(a.entries == gamma_table(1, 2).entries);
}

TEST_CASE("dual product coefficients come from the gamma table") {
  const auto& tab = gamma_table_cached(1, 1);
  const CoeffComb prod = dual_multiply({1, 0, 1}, {1, 1, 0});
  for (const auto& [idx, c] : prod) {
    const GammaKey key{0, 1, 1, 0, idx.m, idx.a, idx.b};
    auto it = tab.entries.find(key);
    REQUIRE(it != tab.entries.end());
    CHECK(it->second == c);
  }
}

TEST_CASE("dual product is associative on low levels") {
  std::vector<MatrixCoeffIndex> coeffs;
  for (int m = 0; m <= 1; ++m)
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) coeffs.push_back({m, a, b});
  for (const auto& f : coeffs)
    for (const auto& g : coeffs)
      for (const auto& h : coeffs) {
        const CoeffComb lhs = comb_mul(dual_multiply(f, g), {{h, Scalar(1)}});
        const CoeffComb rhs = comb_mul({{f, Scalar(1)}}, dual_multiply(g, h));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("coproduct of elementary sequences") {
  const TensorElement d = delta_elem({1, 0, 1}, 2);
  // counit legs: blocks (0,q) and (q,0) restrict to the elementary matrix
  const Matrix b0q = d.block(0, 1);
  Matrix e(2);
  e(0, 1) = Scalar(1);
  CHECK(b0q == e);
  CHECK(d.block(1, 0) == e);
  // off-component counit legs vanish
  CHECK(d.block(0, 2).is_zero());
  // parity: blocks with m + n odd vs even selection
  CHECK_FALSE(d.block(1, 2).is_zero());
}

TEST_CASE("counit extracts the level-0 coefficient") {
  // eps(K^k X^n Y^p) = 1 when n = p = 0, else 0
  CHECK(counit(theta(PBWMonomial{-2, 0, 0}, 3)).is_one());
  CHECK(counit(theta(PBWMonomial{1, 1, 0}, 3)).is_zero());
  CHECK(counit(theta(PBWMonomial{0, 1, 1}, 3)).is_zero());
  CHECK(counit(TruncatedElement::unit(3)).is_one());
}

TEST_CASE("antipode matrix at level 1") {
  const Matrix q1 = antipode_matrix(1);
  CHECK(q1(0, 0).is_zero());
  CHECK(q1(0, 1).is_one());
  CHECK(q1(1, 0) == -Scalar::tpow(-2));
  CHECK(q1(1, 1).is_zero());
}

TEST_CASE("antipode on generators through the completion") {
  const int cap = 3;
  // S(X) = -t^2 X, S(Y) = -t^-2 Y, S(K) = K^-1
  CHECK(antipode(theta(PBWMonomial{0, 1, 0}, cap)) ==
        trunc_scale(theta(PBWMonomial{0, 1, 0}, cap), -Scalar::tpow(2)));
  CHECK(antipode(theta(PBWMonomial{0, 0, 1}, cap)) ==
        trunc_scale(theta(PBWMonomial{0, 0, 1}, cap), -Scalar::tpow(-2)));
  CHECK(antipode(theta(PBWMonomial{1, 0, 0}, cap)) == theta(PBWMonomial{-1, 0, 0}, cap));
  CHECK(antipode(TruncatedElement::unit(cap)) == TruncatedElement::unit(cap));
}

TEST_CASE("antipode squared is conjugation by K^2") {
  const int cap = 3;
  for (const PBWMonomial mono : {PBWMonomial{0, 1, 0}, PBWMonomial{-1, 2, 1}, PBWMonomial{2, 0, 2}}) {
    const TruncatedElement z = theta(mono, cap);
    const TruncatedElement s2 = antipode(antipode(z));
    const TruncatedElement k2 = theta(PBWMonomial{2, 0, 0}, cap);
    const TruncatedElement k2inv = theta(PBWMonomial{-2, 0, 0}, cap);
    CHECK(s2 == trunc_mul(trunc_mul(k2, z), k2inv));
  }
}

TEST_CASE("hopf antipode axiom on elementary sequences") {
  for (int q = 0; q <= 2; ++q)
    for (int a = 0; a <= q; ++a)
      for (int b = 0; b <= q; ++b)
        for (int r = 0; r <= 3; ++r) CHECK(hopf_axiom_check({q, a, b}, r));
}

TEST_CASE("classical limit of the structure constants") {
  const auto rep = classical_limit_gamma(1, 1, 1e-3);
  CHECK(rep.compared > 0);
  CHECK(rep.max_dev <= 1e-2);
  // tighter epsilon tightens the deviation
  const auto rep2 = classical_limit_gamma(1, 1, 1e-5);
  CHECK(rep2.max_dev < rep.max_dev);
}
