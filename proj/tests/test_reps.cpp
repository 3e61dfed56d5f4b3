#include <doctest.h>

#include <random>

#include "qsl2/pbw_rewrite.hpp"
#include "qsl2/reps.hpp"

using namespace qsl2;

TEST_CASE("level 1 generator matrices") {
  const auto r = build_rep(1);
  CHECK(r.K(0, 0) == Scalar::tpow(-1));
  CHECK(r.K(1, 1) == Scalar::tpow(1));
  CHECK(r.K(0, 1).is_zero());
  CHECK(r.X(1, 0) == Scalar(1));
  CHECK(r.X(0, 1).is_zero());
  CHECK(r.Y(0, 1) == Scalar(1));
  CHECK(r.H(0, 0) == Scalar(-1));
  CHECK(r.H(1, 1) == Scalar(1));
}

TEST_CASE("level 2 raising and lowering entries") {
  const auto r = build_rep(2);
  CHECK(r.X(1, 0) == qint(1));
  CHECK(r.X(2, 1) == qint(2));
  CHECK(r.Y(0, 1) == qint(2));
  CHECK(r.Y(1, 2) == qint(1));
  CHECK(weight(2, 0) == -2);
  CHECK(weight(2, 2) == 2);
}

TEST_CASE("relation checks pass through level 4") {
  for (int m = 0; m <= 4; ++m) {
    const auto rep = validate_rep(m);
    CHECK(rep.all_pass());
    CHECK(rep.items.size() == 7);
  }
}

TEST_CASE("monomial images multiply like matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> kd(-2, 2), nd(0, 2);
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 12; ++trial) {
      const PBWMonomial a{kd(rng), nd(rng), nd(rng)};
      const PBWMonomial b{kd(rng), nd(rng), nd(rng)};
      CHECK(pbw_image(mono_product(a, b), m) == pbw_image(a, m) * pbw_image(b, m));
    }
}

TEST_CASE("word rewriting matches representation images") {
  const std::vector<std::vector<Gen>> words = {
      {Gen::Y, Gen::X},
      {Gen::X, Gen::Y, Gen::X},
      {Gen::K, Gen::X, Gen::Kinv, Gen::Y},
      {Gen::Y, Gen::Y, Gen::X, Gen::K},
  };
  for (const auto& w : words) {
    const MonoComb comb = rewrite_word(w);
    for (int m = 0; m <= 3; ++m) {
      const auto r = build_rep(m);
      Matrix expect = Matrix::identity(m + 1);
      for (Gen g : w) {
        const Matrix& gm = g == Gen::X ? r.X : g == Gen::Y ? r.Y : g == Gen::K ? r.K : r.Kinv;
        expect = expect * gm;
      }
      CHECK(pbw_image(comb, m) == expect);
    }
  }
}

TEST_CASE("rewriting lands in normal form") {
  const MonoComb comb = rewrite_word({Gen::Y, Gen::X, Gen::Y, Gen::X});
  for (const auto& [mono, c] : comb) {
    CHECK_FALSE(c.is_zero());
    CHECK(mono.n >= 0);
    CHECK(mono.p >= 0);
  }
}

TEST_CASE("surjectivity witnesses reconstruct elementary matrices") {
  for (int m = 0; m <= 3; ++m) {
    const auto wit = surjectivity_witness(m);
    REQUIRE(wit.size() == static_cast<std::size_t>(m + 1));
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        for (const auto& [mono, c] : wit[a][b]) CHECK(mono.kexp == 0);
        Matrix e(m + 1);
        e(a, b) = Scalar(1);
        CHECK(pbw_image(wit[a][b], m) == e);
      }
  }
}
