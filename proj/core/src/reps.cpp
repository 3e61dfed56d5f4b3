#include "qsl2/reps.hpp"

#include "qsl2/rep_kernel.hpp"

namespace qsl2 {

RepMatrices build_rep(int m) {
  if (m < 0) throw std::invalid_argument("level must be nonnegative");
  auto r = build_rep_t(ExactOps{}, m);
  return RepMatrices{m, std::move(r.X), std::move(r.Y), std::move(r.K), std::move(r.Kinv),
                     std::move(r.H)};
}

int weight(int m, int a) { return rep_weight(m, a); }

static Matrix kpow_image(int kexp, int m) {
  const int d = m + 1;
  Matrix r(d);
  for (int a = 0; a < d; ++a) r(a, a) = Scalar::tpow(kexp * rep_weight(m, a));
  return r;
}

Matrix pbw_image(const PBWMonomial& mono, int m) {
  const auto rep = build_rep(m);
  const Matrix k = kpow_image(mono.kexp, m);
  const Matrix xs = rep.X.pow(mono.n);
  const Matrix ys = rep.Y.pow(mono.p);
  return mono.x_first() ? k * xs * ys : k * ys * xs;
}

Matrix pbw_image(const MonoComb& comb, int m) {
  Matrix acc(m + 1);
  for (const auto& [mono, coeff] : comb) acc = acc + pbw_image(mono, m).scaled(coeff);
  return acc;
}

CheckReport validate_rep(int m) {
  const auto rep = build_rep(m);
  const int d = m + 1;
  const Matrix I = Matrix::identity(d);
  CheckReport rep_report;
  auto add = [&](std::string name, bool pass) {
    rep_report.items.push_back({std::move(name), pass});
  };

  const Scalar t2 = Scalar::tpow(2), tm2 = Scalar::tpow(-2);
  add("KX = t^2 XK", rep.K * rep.X == (rep.X * rep.K).scaled(t2));
  add("KY = t^-2 YK", rep.K * rep.Y == (rep.Y * rep.K).scaled(tm2));
  const Scalar denom = t2 - tm2;
  const Matrix k2 = rep.K * rep.K, kinv2 = rep.Kinv * rep.Kinv;
  add("XY - YX = (K^2 - K^-2)/(t^2 - t^-2)",
      rep.X * rep.Y - rep.Y * rep.X == (k2 - kinv2).scaled(denom.inverse()));
  add("K K^-1 = I", rep.K * rep.Kinv == I);

  // Casimir C = (tK - t^-1 K^-1)^2 / (t^2 - t^-2)^2 + YX
  const Matrix a = rep.K.scaled(Scalar::tpow(1)) - rep.Kinv.scaled(Scalar::tpow(-1));
  const Matrix casimir = (a * a).scaled((denom * denom).inverse()) + rep.Y * rep.X;
  add("rho(C) = lambda_m I", casimir == I.scaled(casimir_eigenvalue(m)));

  add("X^{m+1} = 0", rep.X.pow(m + 1).is_zero());
  add("Y^{m+1} = 0", rep.Y.pow(m + 1).is_zero());
  return rep_report;
}

std::vector<std::vector<MonoComb>> surjectivity_witness(int m) {
  const int d = m + 1;
  std::vector<std::vector<MonoComb>> wit(d, std::vector<MonoComb>(d));

  // One diagonal at a time: offset k >= 0 means subdiagonal (targets E_{j+k,j})
  // spanned by images of X^{p+k} Y^p, offset k < 0 the superdiagonal spanned
  // by Y^{p-k} X^p... mirrored below via Y-first monomials.
  for (int off = -m; off <= m; ++off) {
    const int len = d - std::abs(off);
    std::vector<PBWMonomial> monos(len);
    for (int p = 0; p < len; ++p) {
      if (off >= 0)
        monos[p] = PBWMonomial{0, p + off, p};
      else
        monos[p] = PBWMonomial{0, p, p - off};
    }
    // V(p, j) = diagonal entry at slot j of the image of monos[p]
    Matrix V(len);
    for (int p = 0; p < len; ++p) {
      const Matrix img = pbw_image(monos[p], m);
      for (int j = 0; j < len; ++j)
        V(p, j) = off >= 0 ? img(j + off, j) : img(j, j - off);
    }
    const Matrix Vinv = V.inverse(); // nonsingular for generic t by the zero pattern
    for (int j = 0; j < len; ++j) {
      MonoComb comb;
      for (int p = 0; p < len; ++p)
        if (!Vinv(j, p).is_zero()) comb.emplace_back(monos[p], Vinv(j, p));
      if (off >= 0)
        wit[j + off][j] = std::move(comb);
      else
        wit[j][j - off] = std::move(comb);
    }
  }
  return wit;
}

} // namespace qsl2
