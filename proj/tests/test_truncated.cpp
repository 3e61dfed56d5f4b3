#include <doctest.h>

#include "qsl2/pbw_rewrite.hpp"
#include "qsl2/truncated.hpp"

using namespace qsl2;

TEST_CASE("theta blocks are the levelwise images") {
  const PBWMonomial mono{-1, 2, 1};
  const TruncatedElement z = theta(mono, 4);
  REQUIRE(z.blocks.size() == 5);
  for (int r = 0; r <= 4; ++r) CHECK(z.blocks[r] == pbw_image(mono, r));
}

TEST_CASE("truncated algebra operations") {
  const TruncatedElement x = theta(PBWMonomial{0, 1, 0}, 3);
  const TruncatedElement y = theta(PBWMonomial{0, 0, 1}, 3);
  CHECK(trunc_add(x, TruncatedElement::zero(3)) == x);
  CHECK(trunc_mul(x, TruncatedElement::unit(3)) == x);
  // Theta is an algebra map: Theta(X)Theta(Y) = Theta(XY)
  CHECK(trunc_mul(x, y) == theta(mono_product({0, 1, 0}, {0, 0, 1}), 3));
  const Scalar c = qint(2);
  const TruncatedElement s = trunc_scale(x, c);
  for (int r = 0; r <= 3; ++r) CHECK(s.blocks[r] == x.blocks[r].scaled(c));
}

TEST_CASE("pairing picks out single coefficients") {
  const ElementaryIndex e{2, 0, 1};
  const TruncatedElement z = elementary_element(e, 3);
  for (int m = 0; m <= 3; ++m)
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        const Scalar v = pair_coeff({m, a, b}, z);
        if (m == e.m && a == e.a && b == e.b) CHECK(v.is_one());
        else CHECK(v.is_zero());
      }
}

TEST_CASE("cmn interpolates between levels") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m == n) continue;
      const TruncatedElement c = cmn_element(m, n, 4);
      CHECK(c.blocks[m] == Matrix::identity(m + 1));
      CHECK(c.blocks[n].is_zero());
    }
}

TEST_CASE("dmn kills low levels except its own") {
  const int cap = 5;
  for (int N = 1; N <= 4; ++N)
    for (int m = 0; m <= N; ++m) {
      const TruncatedElement d = dmn_element(m, N, cap);
      for (int r = 0; r <= N; ++r) {
        if (r == m) CHECK(d.blocks[r] == Matrix::identity(r + 1));
        else CHECK(d.blocks[r].is_zero());
      }
    }
}

TEST_CASE("dmn one-based variant leaves level 0 alone") {
  const TruncatedElement d = dmn_element(2, 3, 4, /*include_level0=*/false);
  CHECK_FALSE(d.blocks[0].is_zero());
  CHECK(d.blocks[1].is_zero());
  CHECK(d.blocks[2] == Matrix::identity(3));
  CHECK(d.blocks[3].is_zero());
}

TEST_CASE("independence rank certificates") {
  std::vector<PBWMonomial> monos;
  for (int k = -1; k <= 1; ++k)
    for (int n = 0; n <= 1; ++n)
      for (int p = 0; p <= 1; ++p) monos.push_back({k, n, p});
  // cap rule: max(n+p) = 2 plus 3 distinct K exponents
  CHECK(rank_cap_rule(monos) == 5);

  const RankReport numeric = pbw_independence_rank(monos, rank_cap_rule(monos));
  CHECK(numeric.count == 12);
  CHECK(numeric.rank == 12);
  CHECK(numeric.full_rank);
  CHECK_FALSE(numeric.exact_mode);

  const RankReport exact =
      pbw_independence_rank(monos, rank_cap_rule(monos), Complex{1.3, 0.0}, 1e-8, true);
  CHECK(exact.exact_mode);
  CHECK(exact.rank == numeric.rank);

  // a forced dependency drops the rank
  auto dep = monos;
  dep.push_back(monos.front());
  const RankReport r2 = pbw_independence_rank(dep, rank_cap_rule(dep));
  CHECK(r2.count == 13);
  CHECK(r2.rank == 12);
  CHECK_FALSE(r2.full_rank);
}

TEST_CASE("rank computation rejects bad evaluation points") {
  CHECK_THROWS(pbw_independence_rank({{0, 1, 0}}, 2, Complex{1.0, 0.0}));
}
