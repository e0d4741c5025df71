#include "frobenius/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace frob {

json to_json(const PAdicInt& a) { return json{{"p", a.prime()}, {"prec", a.prec()}, {"residue", a.residue()}}; }

json to_json(const Series& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, c.residue()}));
    return json{{"vars", s.ring().vars()},
                {"terms", std::move(terms)},
                {"p", s.ring().prime()},
                {"prec", s.prec()},
                {"degcap", s.ring().degcap()},
                {"text", s.to_string()}};
}

Series series_from_json(const json& j, const SeriesRing& ring) {
    if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("series JSON needs an integer or an object with a \"terms\" array");
    if (j.contains("vars") && j["vars"].get<std::vector<std::string>>() != ring.vars())
        throw std::invalid_argument("series JSON variables do not match the coefficient ring");
    Series acc = ring.zero();
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || !t[1].is_number_integer())
            throw std::invalid_argument("each term must be [[exponents...], integer]");
        auto exps = t[0].get<std::vector<int>>();
        if (exps.size() != ring.nvars())
            throw std::invalid_argument("term exponent vector has length " + std::to_string(exps.size()) +
                                        ", expected " + std::to_string(ring.nvars()));
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("negative exponent");
        acc += ring.monomial(std::move(exps), t[1].get<std::int64_t>());
    }
    return acc;
}

namespace {

// Polynomial text such as "u1^2 - 3*u1 + 2": signed terms, each an optional
// integer followed by factors var or var^k joined by '*'.
Series parse_poly_text(const std::string& text, const SeriesRing& ring) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty element");
    auto fail = [&](std::size_t at) {
        return std::invalid_argument("cannot parse element '" + text + "' near position " + std::to_string(at));
    };
    auto read_int = [&](std::size_t& i) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i || j - i > 18) throw fail(i);
        const auto v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    };
    Series acc = ring.zero();
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (i != 0) {
            throw fail(i);
        }
        Series term = ring.from_int(sign);
        bool need_factor = true;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            term = ring.from_int(sign * read_int(i));
            need_factor = false;
        }
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (!need_factor) {
                if (s[i] != '*') throw fail(i);
                ++i;
            }
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])) != 0) ++j;
            if (j == i || std::isdigit(static_cast<unsigned char>(s[i]))) throw fail(i);
            Series factor = ring.var(s.substr(i, j - i));
            i = j;
            if (i < s.size() && s[i] == '^') {
                ++i;
                factor = factor.pow(static_cast<unsigned>(read_int(i)));
            }
            term *= factor;
            need_factor = false;
        }
        if (need_factor) throw fail(i);
        acc += term;
    }
    return acc;
}

}  // namespace

Series parse_series(const std::string& text, const SeriesRing& ring) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        return parse_poly_text(text, ring);
    }
    return series_from_json(j, ring);
}

Elt alg_from_json(const json& j, const std::shared_ptr<const Algebra>& algebra) {
    const json& vec = j.is_object() ? j.at("vec") : j;
    if (!vec.is_array()) throw std::invalid_argument("algebra element JSON needs a coordinate array");
    if (vec.size() > algebra->rank())
        throw std::invalid_argument("algebra element has more coordinates than the rank");
    std::vector<Series> coords;
    for (const auto& c : vec) coords.push_back(series_from_json(c, *algebra->base()));
    coords.resize(algebra->rank(), algebra->base()->zero());
    return algebra->element(std::move(coords));
}

json to_json(const Check& c) {
    return json{{"check", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"paper_ref", c.ref}};
}

json to_json(const FrobeniusReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return json{{"model", r.model_id}, {"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

json to_json(const IndexReport& r) {
    json val = r.valuation ? json(*r.valuation) : json(">= prec");
    return json{{"determinant", to_json(r.determinant)}, {"valuation", val}, {"cofactor_unit", r.cofactor_unit}};
}

json to_json(const SubgroupTable& t) {
    return json{{"p", t.p}, {"n", t.n}, {"k", t.k}, {"count", t.count()}, {"subgroups", t.subgroups}};
}

}  // namespace frob
