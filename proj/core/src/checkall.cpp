#include "qsl2/checkall.hpp"

#include <string>

#include "qsl2/braids.hpp"
#include "qsl2/coalgebra.hpp"
#include "qsl2/ribbon.hpp"
#include "qsl2/truncated.hpp"

namespace qsl2 {

namespace {

std::string tag(const std::string& base, std::initializer_list<int> args) {
  std::string s = base + "(";
  bool first = true;
  for (int a : args) {
    if (!first) s += ",";
    s += std::to_string(a);
    first = false;
  }
  return s + ")";
}

bool surjectivity_ok(int m) {
  const auto wit = surjectivity_witness(m);
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      Matrix e(m + 1);
      e(a, b) = Scalar(1);
      if (!(pbw_image(wit[a][b], m) == e)) return false;
    }
  return true;
}

bool projectors_ok(int L) {
  const int cap = L;
  for (int m = 0; m <= L; ++m) {
    const TruncatedElement d = dmn_element(m, L, cap);
    for (int r = 0; r <= cap; ++r) {
      const Matrix expect =
          r == m ? Matrix::identity(r + 1) : Matrix(r + 1);
      if (!(d.blocks[r] == expect)) return false;
    }
  }
  return true;
}

bool drinfeld_ok(int m) {
  // u rho(g) u^-1 = rho(S^2 g) = K^2 rho(g) K^-2 for the generators.
  const auto rep = build_rep(m);
  const Matrix u = drinfeld_u(m);
  const Matrix uinv = u.inverse();
  const Matrix k2 = rep.K * rep.K;
  const Matrix k2inv = rep.Kinv * rep.Kinv;
  for (const Matrix* g : {&rep.X, &rep.Y, &rep.K})
    if (!(u * *g * uinv == k2 * *g * k2inv)) return false;
  return true;
}

bool hopf_ok(int L) {
  for (int m = 0; m <= L; ++m)
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b)
        for (int r = 0; r <= L; ++r)
          if (!hopf_axiom_check({m, a, b}, r)) return false;
  return true;
}

bool braid_relations_ok(int m, int strands) {
  const auto eq = [&](const BraidWord& l, const BraidWord& r) {
    return braid_matrix(l, m) == braid_matrix(r, m);
  };
  for (int i = 1; i < strands - 1; ++i)
    if (!eq({strands, {i, i + 1, i}}, {strands, {i + 1, i, i + 1}})) return false;
  for (int i = 1; i < strands; ++i)
    for (int j = i + 2; j < strands; ++j)
      if (!eq({strands, {i, j}}, {strands, {j, i}})) return false;
  for (int i = 1; i < strands; ++i)
    if (!(braid_matrix({strands, {i, -i}}, m) ==
          Matrix::identity(braid_matrix({strands, {}}, m).size())))
      return false;
  return true;
}

} // namespace

CheckReport check_all(int max_level) {
  const int L = max_level;
  CheckReport rep;
  auto add = [&](std::string name, bool pass) {
    rep.items.push_back({std::move(name), pass});
  };

  for (int m = 0; m <= L; ++m) {
    add(tag("relations", {m}), validate_rep(m).all_pass());
    add(tag("surjectivity", {m}), surjectivity_ok(m));
    add(tag("antipode-squared", {m}), drinfeld_ok(m));
    add(tag("ribbon-scalar", {m}), [&] {
      ribbon_v(m); // throws if not scalar
      return true;
    }());
  }

  add(tag("projectors", {L}), projectors_ok(L));
  add(tag("hopf", {L}), hopf_ok(L));

  for (int m = 0; m <= L; ++m)
    for (int n = m; n <= L; ++n) {
      add(tag("gamma", {m, n}), validate_gamma(gamma_table_cached(m, n)));
      add(tag("quasitriangular", {m, n}), check_quasitriangular(m, n));
    }

  const int yL = std::min(L, 2);
  for (int a = 0; a <= yL; ++a)
    for (int b = a; b <= yL; ++b)
      for (int c = b; c <= yL; ++c) add(tag("ybe", {a, b, c}), check_ybe(a, b, c));

  const int bL = std::min(L, 2);
  for (int m = 0; m <= bL; ++m) add(tag("braid-relations", {m, 3}), braid_relations_ok(m, 3));

  return rep;
}

} // namespace qsl2
