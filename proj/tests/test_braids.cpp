#include <doctest.h>

#include <random>

#include "qsl2/braids.hpp"
#include "qsl2/ribbon.hpp"

using namespace qsl2;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int len) {
  BraidWord w;
  w.strands = strands;
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < len; ++i) w.word.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return w;
}

} // namespace

TEST_CASE("braid group relations") {
  for (int m = 0; m <= 2; ++m)
    for (int s = 2; s <= 4; ++s) {
      for (int i = 1; i < s - 1; ++i)
        CHECK(braid_matrix({s, {i, i + 1, i}}, m) == braid_matrix({s, {i + 1, i, i + 1}}, m));
      for (int i = 1; i < s; ++i)
        for (int j = i + 2; j < s; ++j)
          CHECK(braid_matrix({s, {i, j}}, m) == braid_matrix({s, {j, i}}, m));
      for (int i = 1; i < s; ++i) {
        const int dim = braid_matrix({s, {}}, m).size();
        CHECK(braid_matrix({s, {i, -i}}, m) == Matrix::identity(dim));
      }
    }
}

TEST_CASE("quantum trace of the identity") {
  // tr(K^2) at level 1 is t^2 + t^-2
  CHECK(quantum_trace(Matrix::identity(2), 1, 1) == Scalar::tpow(2) + Scalar::tpow(-2));
  CHECK(quantum_trace(Matrix::identity(1), 1, 0).is_one());
}

TEST_CASE("unknot normalizes to one") {
  const auto res = link_invariant({1, {}}, 1);
  CHECK(res.writhe == 0);
  CHECK(res.normalized.is_one());
}

TEST_CASE("color zero collapses every word") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto res = link_invariant(random_word(rng, 3, 4), 0);
    CHECK(res.normalized.is_one());
  }
}

TEST_CASE("raw trace is conjugation invariant") {
  // Markov move I: cyclic rotation of the braid word preserves the trace
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord w = random_word(rng, 3, 5);
    BraidWord rot = w;
    std::rotate(rot.word.begin(), rot.word.begin() + 1, rot.word.end());
    CHECK(link_invariant(w, 1).raw == link_invariant(rot, 1).raw);
  }
}

TEST_CASE("stabilization preserves the corrected invariant") {
  // Markov move II: appending sigma_s^{+-1} on an extra strand
  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 2, 4);
    for (int sgn : {1, -1}) {
      BraidWord stab = w;
      ++stab.strands;
      stab.word.push_back(sgn * (stab.strands - 1));
      const auto a = link_invariant(w, 1);
      const auto b = link_invariant(stab, 1);
      CHECK(a.corrected == b.corrected);
      CHECK(a.normalized == b.normalized);
    }
  }
}

TEST_CASE("trefoil regression value") {
  const auto res = link_invariant({2, {1, 1, 1}}, 1);
  CHECK(res.writhe == 3);
  const Scalar expect = Scalar::tpow(-4) + Scalar::tpow(-12) - Scalar::tpow(-16);
  CHECK(res.normalized == expect);
  // Markov-equivalent presentation on three strands
  const auto res2 = link_invariant({3, {1, 1, 1, 2}}, 1);
  CHECK(res2.normalized == expect);
  // mirror image inverts t
  const auto mirror = link_invariant({2, {-1, -1, -1}}, 1);
  CHECK(mirror.normalized == Scalar::tpow(4) + Scalar::tpow(12) - Scalar::tpow(16));
}

TEST_CASE("figure eight is amphichiral") {
  const BraidWord fig8{3, {1, -2, 1, -2}};
  const BraidWord mirror{3, {-1, 2, -1, 2}};
  const auto a = link_invariant(fig8, 1);
  CHECK(a.writhe == 0);
  CHECK(a.normalized == link_invariant(mirror, 1).normalized);
}
