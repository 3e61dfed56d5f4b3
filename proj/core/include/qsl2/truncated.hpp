#pragma once

#include "qsl2/reps.hpp"

namespace qsl2 {

/// Level-capped model of the completion: block m has size m+1, m = 0..cap.
struct TruncatedElement {
  int cap = -1;
  std::vector<Matrix> blocks;

  static TruncatedElement zero(int cap);
  static TruncatedElement unit(int cap);
  bool operator==(const TruncatedElement& o) const { return cap == o.cap && blocks == o.blocks; }
};

struct MatrixCoeffIndex {
  int m = 0, a = 0, b = 0;
  auto operator<=>(const MatrixCoeffIndex&) const = default;
};
struct ElementaryIndex {
  int m = 0, a = 0, b = 0;
  auto operator<=>(const ElementaryIndex&) const = default;
};

TruncatedElement theta(const PBWMonomial& mono, int cap);
TruncatedElement theta(const MonoComb& comb, int cap);
TruncatedElement elementary_element(const ElementaryIndex& e, int cap);

TruncatedElement trunc_add(const TruncatedElement& x, const TruncatedElement& y);
TruncatedElement trunc_mul(const TruncatedElement& x, const TruncatedElement& y);
TruncatedElement trunc_scale(const TruncatedElement& x, const Scalar& c);

/// The pairing <^mc^a_b, z>: entry (a,b) of block m.
Scalar pair_coeff(const MatrixCoeffIndex& idx, const TruncatedElement& z);

/// C_{m,n} = (C - lambda_n)/(lambda_m - lambda_n), levelwise scalar blocks.
TruncatedElement cmn_element(int m, int n, int cap);
/// D_{m,N}: product of C_{m,n} over n = 0..N (or 1..N when include_level0 is
/// false), n != m. Kills levels <= N except m, identity at m.
TruncatedElement dmn_element(int m, int N, int cap, bool include_level0 = true);

struct RankReport {
  int rank = 0;
  int count = 0;
  bool full_rank = false;
  bool exact_mode = false;
};

/// Numeric (default) or exact rank of the coordinate matrix whose rows are
/// the flattened theta-images of the monomials up to the cap.
RankReport pbw_independence_rank(const std::vector<PBWMonomial>& monos, int cap,
                                 Complex t0 = Complex{1.3, 0.0}, double threshold = 1e-8,
                                 bool exact = false);

/// Default cap for an independence certificate: max(n+p) plus the number of
/// distinct K-exponents in the family.
int rank_cap_rule(const std::vector<PBWMonomial>& monos);

} // namespace qsl2
