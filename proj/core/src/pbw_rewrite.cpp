#include "qsl2/pbw_rewrite.hpp"

#include <map>
#include <string>

namespace qsl2 {

namespace {

// Intermediate term: all K's collected at the front, letters 'X'/'Y' after.
struct Term {
  int kexp = 0;
  std::string xy;
  auto operator<=>(const Term&) const = default;
};

using TermMap = std::map<Term, Scalar>;

void add_to(TermMap& acc, const Term& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(t);
  if (it == acc.end()) {
    acc.emplace(t, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// A term is in normal form when its letters match the two-order convention:
// all X before Y if #X >= #Y, all Y before X otherwise.
bool normal(const std::string& xy) {
  const auto nx = std::count(xy.begin(), xy.end(), 'X');
  const auto ny = static_cast<long>(xy.size()) - nx;
  const char first = nx >= ny ? 'X' : 'Y';
  const char second = first == 'X' ? 'Y' : 'X';
  bool seen_second = false;
  for (char ch : xy) {
    if (ch == second) seen_second = true;
    else if (seen_second) return false;
  }
  return true;
}

// Replace the first out-of-order adjacent pair. Swapping "YX" -> "XY" costs
// -(K^2 - K^-2)/(t^2 - t^-2) inserted at the pair (then moved to the front);
// "XY" -> "YX" costs the same with opposite sign.
void reduce_term(TermMap& out, const Term& term, const Scalar& coeff) {
  TermMap work;
  add_to(work, term, coeff);
  const Scalar comm = (Scalar::tpow(2) - Scalar::tpow(-2)).inverse();
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Term t = node.key();
    const Scalar c = node.mapped();
    if (normal(t.xy)) {
      add_to(out, t, c);
      continue;
    }
    const auto nx = std::count(t.xy.begin(), t.xy.end(), 'X');
    const auto ny = static_cast<long>(t.xy.size()) - nx;
    const char lead = nx >= ny ? 'X' : 'Y';
    // first adjacent pair with the trailing letter before the leading letter
    size_t i = 0;
    while (!(t.xy[i] != lead && t.xy[i + 1] == lead)) ++i;
    // commutator sign: YX = XY - (K^2-K^-2)/(..), XY = YX + (K^2-K^-2)/(..)
    const int sign = t.xy[i] == 'Y' ? -1 : 1;
    // swapped term
    Term swapped = t;
    std::swap(swapped.xy[i], swapped.xy[i + 1]);
    add_to(work, swapped, c);
    // K^{+-2} terms: remove the pair, move K^{+-2} across the prefix
    long px = 0, py = 0;
    for (size_t j = 0; j < i; ++j) (t.xy[j] == 'X' ? px : py)++;
    Term shorter = t;
    shorter.xy.erase(i, 2);
    const int move = static_cast<int>(4 * (py - px)); // prefix move exponent for K^2
    Term up = shorter;
    up.kexp += 2;
    add_to(work, up, c * Scalar::tpow(move) * comm * Scalar(sign));
    Term down = shorter;
    down.kexp -= 2;
    add_to(work, down, c * Scalar::tpow(-move) * comm * Scalar(-sign));
  }
}

MonoComb to_comb(const TermMap& terms) {
  std::map<PBWMonomial, Scalar> acc;
  for (const auto& [t, c] : terms) {
    const int n = static_cast<int>(std::count(t.xy.begin(), t.xy.end(), 'X'));
    const int p = static_cast<int>(t.xy.size()) - n;
    const PBWMonomial mono{t.kexp, n, p};
    auto it = acc.find(mono);
    if (it == acc.end()) acc.emplace(mono, c);
    else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return MonoComb(acc.begin(), acc.end());
}

} // namespace

MonoComb rewrite_word(const std::vector<Gen>& word) {
  TermMap terms;
  add_to(terms, Term{}, Scalar(1));
  for (Gen g : word) {
    TermMap next;
    for (const auto& [t, c] : terms) {
      const auto nx = std::count(t.xy.begin(), t.xy.end(), 'X');
      const auto ny = static_cast<long>(t.xy.size()) - nx;
      switch (g) {
        case Gen::K: {
          // move the appended K to the front: XK = t^-2 KX, YK = t^2 KY
          Term u = t;
          u.kexp += 1;
          add_to(next, u, c * Scalar::tpow(static_cast<int>(2 * (ny - nx))));
          break;
        }
        case Gen::Kinv: {
          Term u = t;
          u.kexp -= 1;
          add_to(next, u, c * Scalar::tpow(static_cast<int>(2 * (nx - ny))));
          break;
        }
        case Gen::X: {
          Term u = t;
          u.xy += 'X';
          add_to(next, u, c);
          break;
        }
        case Gen::Y: {
          Term u = t;
          u.xy += 'Y';
          add_to(next, u, c);
          break;
        }
      }
    }
    terms = std::move(next);
  }
  TermMap reduced;
  for (const auto& [t, c] : terms) reduce_term(reduced, t, c);
  return to_comb(reduced);
}

std::vector<Gen> mono_to_word(const PBWMonomial& m) {
  std::vector<Gen> w;
  for (int i = 0; i < std::abs(m.kexp); ++i) w.push_back(m.kexp > 0 ? Gen::K : Gen::Kinv);
  if (m.x_first()) {
    w.insert(w.end(), m.n, Gen::X);
    w.insert(w.end(), m.p, Gen::Y);
  } else {
    w.insert(w.end(), m.p, Gen::Y);
    w.insert(w.end(), m.n, Gen::X);
  }
  return w;
}

MonoComb mono_product(const PBWMonomial& a, const PBWMonomial& b) {
  auto w = mono_to_word(a);
  const auto wb = mono_to_word(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return rewrite_word(w);
}

MonoComb comb_add(const MonoComb& a, const MonoComb& b) {
  std::map<PBWMonomial, Scalar> acc(a.begin(), a.end());
  for (const auto& [m, c] : b) {
    auto it = acc.find(m);
    if (it == acc.end()) acc.emplace(m, c);
    else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return MonoComb(acc.begin(), acc.end());
}

MonoComb comb_scale(const MonoComb& a, const Scalar& c) {
  MonoComb r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a) r.emplace_back(m, x * c);
  return r;
}

MonoComb comb_product(const MonoComb& a, const MonoComb& b) {
  MonoComb acc;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) acc = comb_add(acc, comb_scale(mono_product(ma, mb), ca * cb));
  return acc;
}

} // namespace qsl2
