#pragma once

#include <json.hpp>

#include "qsl2/braids.hpp"
#include "qsl2/coalgebra.hpp"
#include "qsl2/ribbon.hpp"
#include "qsl2/truncated.hpp"

namespace qsl2 {

using json = nlohmann::json;

// Rational as "p/q" (or "p" when q = 1); LaurentPoly as {"exp": "p/q", ...};
// Scalar as {"numer": ..., "denom": ...}; complex as [re, im];
// Matrix as {"size": n, "entries": [[...]]}.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Complex& c);
Complex complex_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const TruncatedElement& z);
TruncatedElement truncated_from_json(const json& j);

json to_json(const PBWMonomial& m);
PBWMonomial mono_from_json(const json& j);

json to_json(const GammaTable& t); // rows of {"m","a","b","n","c","d","p","u","v","gamma"}
GammaTable gamma_from_json(const json& j);

json to_json(const TensorElement& t);
json to_json(const RankReport& r);
json to_json(const InvariantResult& r);
json to_json(const TwistTable& t);
json to_json(const CheckReport& r);

std::string gamma_to_csv(const GammaTable& t);
std::string twist_to_csv(const TwistTable& t);

/// Parse "k=-1,n=2,p=1" (missing fields default to 0).
PBWMonomial parse_mono_spec(const std::string& spec);

} // namespace qsl2
