#pragma once

#include <json.hpp>

#include "frobenius/charfun.hpp"
#include "frobenius/freealg.hpp"
#include "frobenius/froblift.hpp"
#include "frobenius/padic.hpp"
#include "frobenius/series.hpp"

namespace frob {

using json = nlohmann::ordered_json;

json to_json(const PAdicInt& a);

/// {"vars":[...],"terms":[[[k...],residue],...],"p":..,"prec":..,"degcap":..}
/// Terms are ordered by exponent vector.
json to_json(const Series& s);

/// Accepts a bare integer (a constant) or an object with "terms" whose
/// coefficients are signed integers. A "vars" entry, when present, must
/// match the ring. Throws std::invalid_argument on malformed input.
Series series_from_json(const json& j, const SeriesRing& ring);

/// Parses --elt style text: JSON, or a bare integer.
Series parse_series(const std::string& text, const SeriesRing& ring);

template <CoefficientRing R>
json to_json(const AlgElt<R>& a) {
    json vec = json::array();
    for (const auto& c : a.vec()) vec.push_back(to_json(c));
    return json{{"symbol", a.parent()->symbol()}, {"vec", std::move(vec)}, {"text", a.to_string()}};
}

template <CoefficientRing R>
json to_json(const MonicPoly<R>& f) {
    json c = json::array();
    for (const auto& a : f.coeffs()) c.push_back(to_json(a));
    return json{{"degree", f.degree()}, {"coeffs", std::move(c)}};
}

/// {"vec":[series, ...]} or a bare array of series, in the basis 1, x, ...
Elt alg_from_json(const json& j, const std::shared_ptr<const Algebra>& algebra);

json to_json(const Check& c);
json to_json(const FrobeniusReport& r);
json to_json(const IndexReport& r);
json to_json(const SubgroupTable& t);

}  // namespace frob
