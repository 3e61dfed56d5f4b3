#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "qsl2/cache.hpp"
#include "qsl2/json_io.hpp"

using namespace qsl2;
namespace fs = std::filesystem;

namespace {

std::mt19937 rng(2026);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 50);
  return Rational(num(rng), den(rng));
}

LaurentPoly random_laurent() {
  LaurentPoly p;
  std::uniform_int_distribution<int> terms(0, 5), expo(-8, 8);
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) p.add_term(expo(rng), random_rational());
  return p;
}

Scalar random_scalar() {
  LaurentPoly den = random_laurent();
  if (den.is_zero()) den = LaurentPoly(Rational(1));
  return Scalar::fraction(random_laurent(), den);
}

Matrix random_matrix(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_scalar();
  return m;
}

} // namespace

TEST_CASE("json round trips on randomized values") {
  for (int i = 0; i < 100; ++i) {
    const Rational r = random_rational();
    CHECK(rational_from_json(rational_to_json(r)) == r);

    const LaurentPoly p = random_laurent();
    CHECK(laurent_from_json(to_json(p)) == p);

    const Scalar s = random_scalar();
    CHECK(scalar_from_json(to_json(s)) == s);

    std::uniform_real_distribution<double> re(-5, 5);
    const Complex c{re(rng), re(rng)};
    CHECK(complex_from_json(to_json(c)) == c);

    std::uniform_int_distribution<int> kd(-5, 5), nd(0, 5);
    const PBWMonomial mono{kd(rng), nd(rng), nd(rng)};
    CHECK(mono_from_json(to_json(mono)) == mono);
  }
  for (int i = 0; i < 20; ++i) {
    const Matrix m = random_matrix(3);
    CHECK(matrix_from_json(to_json(m)) == m);

    TruncatedElement z;
    z.cap = 2;
    for (int r = 0; r <= 2; ++r) z.blocks.push_back(random_matrix(r + 1));
    CHECK(truncated_from_json(to_json(z)) == z);
  }
  const GammaTable tab = gamma_table(1, 2);
  const GammaTable back = gamma_from_json(to_json(tab));
  CHECK(back.m == tab.m);
  CHECK(back.n == tab.n);
  CHECK(back.entries == tab.entries);
}

TEST_CASE("serialization is canonical") {
  CHECK(to_json(gamma_table(1, 1)).dump() == to_json(gamma_table(1, 1)).dump());
  const TruncatedElement z = theta(PBWMonomial{1, 1, 1}, 3);
  CHECK(to_json(z).dump() == to_json(theta(PBWMonomial{1, 1, 1}, 3)).dump());
}

TEST_CASE("csv emitters") {
  const std::string csv = gamma_to_csv(gamma_table(0, 1));
  CHECK(csv.rfind("m,a,b,n,c,d,p,u,v,gamma\n", 0) == 0);
  CHECK(csv.find("0,0,0,1,") != std::string::npos);
}

TEST_CASE("monomial spec parsing") {
  const PBWMonomial m = parse_mono_spec("k=-1,n=2,p=1");
  CHECK(m == PBWMonomial{-1, 2, 1});
  CHECK(parse_mono_spec("n=3") == PBWMonomial{0, 3, 0});
  CHECK_THROWS(parse_mono_spec("z=1"));
  CHECK_THROWS(parse_mono_spec("nonsense"));
}

TEST_CASE("gamma disk cache round trip") {
  const fs::path dir = fs::temp_directory_path() / "qsl2-cache-test";
  fs::remove_all(dir);
  setenv("QSL2_CACHE_DIR", dir.c_str(), 1);

  const GammaTable first = gamma_table_disk_cached(1, 1);
  CHECK(fs::exists(gamma_cache_path(1, 1)));
  const GammaTable second = gamma_table_disk_cached(1, 1);
  CHECK(first.entries == second.entries);

  // corrupt the stored file; the loader must recompute and overwrite
  {
    std::ofstream out(gamma_cache_path(1, 1));
    out << "{ not json";
  }
  const GammaTable third = gamma_table_disk_cached(1, 1);
  CHECK(third.entries == first.entries);
  {
    std::ifstream in(gamma_cache_path(1, 1));
    json j;
    in >> j;
    CHECK(gamma_from_json(j).entries == first.entries);
  }

  // two writes of the same table are byte identical
  const auto path = gamma_cache_path(1, 1);
  std::ifstream in1(path);
  std::stringstream buf1;
  buf1 << in1.rdbuf();
  CHECK(store_gamma(first));
  std::ifstream in2(path);
  std::stringstream buf2;
  buf2 << in2.rdbuf();
  CHECK(buf1.str() == buf2.str());

  unsetenv("QSL2_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_CASE("unwritable cache degrades to memory") {
  setenv("QSL2_CACHE_DIR", "/proc/definitely-unwritable/cache", 1);
  const GammaTable tab = gamma_table_disk_cached(0, 1);
  CHECK(validate_gamma(tab));
  CHECK_FALSE(store_gamma(tab));
  unsetenv("QSL2_CACHE_DIR");
}
