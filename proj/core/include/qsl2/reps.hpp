#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qsl2/matrix.hpp"

namespace qsl2 {

/// Generator images of the level-m irreducible on the ordered basis
/// e_{-m/2}, ..., e_{m/2} (0-based index a = i + m/2).
struct RepMatrices {
  int m = 0;
  Matrix X, Y, K, Kinv, H;
};

RepMatrices build_rep(int m);
int weight(int m, int a); // 2a - m

/// Normal-form monomial K^kexp X^n Y^p (X before Y when n >= p,
/// Y^p X^n otherwise).
struct PBWMonomial {
  int kexp = 0;
  int n = 0;
  int p = 0;
  bool x_first() const { return n >= p; }
  auto operator<=>(const PBWMonomial&) const = default;
};

using MonoComb = std::vector<std::pair<PBWMonomial, Scalar>>;

Matrix pbw_image(const PBWMonomial& mono, int m);
Matrix pbw_image(const MonoComb& comb, int m);

struct CheckItem {
  std::string name;
  bool pass = false;
};
struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Exact identity checks for rho_m: the defining relations, the Casimir
/// eigenvalue, and nilpotency of X and Y.
CheckReport validate_rep(int m);

/// For each elementary matrix E_{a,b} of size m+1, a finite combination of
/// kexp = 0 PBW monomials whose level-m image is exactly E_{a,b}.
/// Result is indexed witness[a][b].
std::vector<std::vector<MonoComb>> surjectivity_witness(int m);

} // namespace qsl2
