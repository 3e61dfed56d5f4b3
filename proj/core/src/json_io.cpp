#include "qsl2/json_io.hpp"

#include <sstream>

namespace qsl2 {

json rational_to_json(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational rational_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  using Int = boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = rational_to_json(c);
  return j;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) p.add_term(std::stoi(k), rational_from_json(v));
  return p;
}

json to_json(const Scalar& s) {
  return json{{"numer", to_json(s.num())}, {"denom", to_json(s.den())}};
}

Scalar scalar_from_json(const json& j) {
  return Scalar::fraction(laurent_from_json(j.at("numer")), laurent_from_json(j.at("denom")));
}

json to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(to_json(m(i, j2)));
    rows.push_back(std::move(row));
  }
  return json{{"size", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const int n = j.at("size").get<int>();
  const auto& rows = j.at("entries");
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.at(0).size());
  Matrix m(n, cols);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = scalar_from_json(rows.at(i).at(k));
  return m;
}

json to_json(const TruncatedElement& z) {
  json blocks = json::array();
  for (const auto& b : z.blocks) blocks.push_back(to_json(b));
  return json{{"cap", z.cap}, {"blocks", std::move(blocks)}};
}

TruncatedElement truncated_from_json(const json& j) {
  TruncatedElement z;
  z.cap = j.at("cap").get<int>();
  for (const auto& b : j.at("blocks")) z.blocks.push_back(matrix_from_json(b));
  return z;
}

json to_json(const PBWMonomial& m) { return json{{"k", m.kexp}, {"n", m.n}, {"p", m.p}}; }

PBWMonomial mono_from_json(const json& j) {
  return PBWMonomial{j.at("k").get<int>(), j.at("n").get<int>(), j.at("p").get<int>()};
}

json to_json(const GammaTable& t) {
  json rows = json::array();
  for (const auto& [key, g] : t.entries)
    rows.push_back(json{{"m", t.m},
                        {"a", key.a},
                        {"b", key.b},
                        {"n", t.n},
                        {"c", key.c},
                        {"d", key.d},
                        {"p", key.p},
                        {"u", key.u},
                        {"v", key.v},
                        {"gamma", to_json(g)}});
  return json{{"m", t.m}, {"n", t.n}, {"rows", std::move(rows)}};
}

GammaTable gamma_from_json(const json& j) {
  GammaTable t;
  t.m = j.at("m").get<int>();
  t.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    const GammaKey key{row.at("a").get<int>(), row.at("b").get<int>(), row.at("c").get<int>(),
                       row.at("d").get<int>(), row.at("p").get<int>(), row.at("u").get<int>(),
                       row.at("v").get<int>()};
    t.entries[key] = scalar_from_json(row.at("gamma"));
  }
  return t;
}

json to_json(const TensorElement& t) {
  json blocks = json::array();
  for (const auto& [mn, blk] : t.blocks)
    blocks.push_back(json{{"m", mn.first}, {"n", mn.second}, {"block", to_json(blk)}});
  return json{{"cap", t.cap}, {"blocks", std::move(blocks)}};
}

json to_json(const RankReport& r) {
  return json{{"rank", r.rank},
              {"count", r.count},
              {"full_rank", r.full_rank},
              {"exact_mode", r.exact_mode}};
}

json to_json(const InvariantResult& r) {
  return json{{"raw", to_json(r.raw)},
              {"writhe", r.writhe},
              {"corrected", to_json(r.corrected)},
              {"normalization", to_json(r.normalization)},
              {"normalized", to_json(r.normalized)}};
}

json to_json(const TwistTable& t) {
  json j = json::object();
  for (const auto& [m, th] : t.theta) j[std::to_string(m)] = to_json(th);
  return j;
}

json to_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& it : r.items) items.push_back(json{{"name", it.name}, {"pass", it.pass}});
  return json{{"pass", r.all_pass()}, {"checks", std::move(items)}};
}

std::string gamma_to_csv(const GammaTable& t) {
  std::ostringstream os;
  os << "m,a,b,n,c,d,p,u,v,gamma\n";
  for (const auto& [key, g] : t.entries)
    os << t.m << ',' << key.a << ',' << key.b << ',' << t.n << ',' << key.c << ',' << key.d << ','
       << key.p << ',' << key.u << ',' << key.v << ",\"" << g.str() << "\"\n";
  return os.str();
}

std::string twist_to_csv(const TwistTable& t) {
  std::ostringstream os;
  os << "m,theta\n";
  for (const auto& [m, th] : t.theta) os << m << ",\"" << th.str() << "\"\n";
  return os.str();
}

PBWMonomial parse_mono_spec(const std::string& spec) {
  PBWMonomial mono;
  std::istringstream is(spec);
  std::string part;
  while (std::getline(is, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad monomial spec: " + spec);
    const std::string key = part.substr(0, eq);
    const int val = std::stoi(part.substr(eq + 1));
    if (key == "k") mono.kexp = val;
    else if (key == "n") mono.n = val;
    else if (key == "p") mono.p = val;
    else throw std::invalid_argument("bad monomial field: " + key);
  }
  return mono;
}

} // namespace qsl2
