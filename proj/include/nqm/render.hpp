#pragma once

#include <string>

#include <json.hpp>

#include "nqm/algebra.hpp"
#include "nqm/kashiwara.hpp"

namespace nqm {

using Json = nlohmann::ordered_json;

/// Canonical text forms.  These strings are the bit-exact golden-file
/// format; parse_element(render(e)) == e for every element.
std::string render(const Scalar& s);
std::string render(const Monomial& m);  // "xm(a)*xm(b)" ; "1" for the empty monomial
std::string render(const Element& e);
std::string render(const KWord& w);
std::string render(const KElement& e);

/// Canonical JSON forms.  Scalars serialize as
///   {"terms": [[qHalf, gammaHalf, "num", "den"], ...]}
/// in ascending key order; elements as {"terms":[{"modes":[...],"coeff":...}]}
/// sorted by (length, modes lex).
Json to_json(const Scalar& s);
Json to_json(const Element& e);
Json to_json(const KElement& e);

}  // namespace nqm
