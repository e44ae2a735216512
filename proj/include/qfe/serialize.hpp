#pragma once

/**
 * @file serialize.hpp
 * @brief JSON encodings of the library's value types.
 *
 *  Rational       "p/q", or "p" when q = 1
 *  RatFunc        {"num": [[coef, dq, dl], ...], "den": [[coef, dq, dl], ...]}
 *  Poly           [coef_0, coef_1, ...]        (index = power of x)
 *  DividedSeries  {"order": N, "divided_coeffs": [...]}
 *  NumberTable    {"family": name, "r": r, "values": [...]}
 *  BasisExpansion {"basis": {"family": name, "r": r}, "coeffs": [...]}
 *  CarlitzPoly    {"variable": "q^x", "coeffs": [...]}  (index = power of y)
 *
 * Term lists are written in canonical graded-lex order. Every decoder
 * canonicalizes, so encode(decode(encode(v))) == encode(v) byte for byte.
 */

#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "qfe/basis.hpp"
#include "qfe/carlitz.hpp"

namespace qfe {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const MPoly& p) {
    Json arr = Json::array();
    for (const auto& t : p.terms()) arr.push_back(Json::array({t.coef.str(), t.deg_q, t.deg_lambda}));
    return arr;
}

inline Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError(0, {"rational string"}, "expected a string such as \"-3/4\"");
    return Rational::parse(j.get<std::string>());
}

inline MPoly mpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError(0, {"term list"}, "expected [[coef, dq, dl], ...]");
    std::vector<Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[1].is_number_unsigned() || !t[2].is_number_unsigned())
            throw ParseError(0, {"[coef, dq, dl]"}, "malformed term " + t.dump());
        terms.push_back({rational_from_json(t[0]), t[1].get<std::size_t>(), t[2].get<std::size_t>()});
    }
    return MPoly::from_terms(terms);
}

inline RatFunc ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError(0, {"{\"num\": ..., \"den\": ...}"}, "expected a rational-function object");
    return RatFunc(mpoly_from_json(j.at("num")), mpoly_from_json(j.at("den")));
}

template <ExactField K>
K scalar_from_json(const Json& j) {
    if constexpr (std::is_same_v<K, Rational>) {
        return rational_from_json(j);
    } else {
        // A bare rational string is accepted as a constant rational function.
        if (j.is_string()) return K(rational_from_json(j));
        return ratfunc_from_json(j);
    }
}

template <ExactField K>
Json values_to_json(const std::vector<K>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

template <ExactField K>
std::vector<K> values_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError(0, {"array"}, "expected an array of scalars");
    std::vector<K> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(scalar_from_json<K>(x));
    return out;
}

template <ExactField K>
Json to_json(const Poly<K>& p) {
    return values_to_json(p.coeffs());
}

template <ExactField K>
Poly<K> poly_from_json(const Json& j) {
    return Poly<K>(values_from_json<K>(j));
}

template <ExactField K>
Json to_json(const DividedSeries<K>& s) {
    return Json{{"order", s.order()}, {"divided_coeffs", values_to_json(s.divided_coeffs())}};
}

template <ExactField K>
DividedSeries<K> series_from_json(const Json& j) {
    auto coeffs = values_from_json<K>(j.at("divided_coeffs"));
    if (coeffs.size() != j.at("order").get<std::size_t>() + 1)
        throw ParseError(0, {"order + 1 coefficients"}, "order does not match coefficient count");
    return DividedSeries<K>::from_divided(std::move(coeffs));
}

inline Json to_json(const FamilyId& f) { return Json{{"family", family_name(f.kind)}, {"r", f.r}}; }

inline FamilyId family_from_json(const Json& j) {
    return {parse_family(j.at("family").get<std::string>()), j.at("r").get<unsigned>()};
}

template <ExactField K>
Json to_json(const NumberTable<K>& t) {
    Json j = to_json(t.family);
    j["values"] = values_to_json(t.values);
    if (t.family.kind == FamilyKind::QBernoulliOrderR) j["assumption"] = std::string(kBernoulliOrderRAssumption);
    return j;
}

template <ExactField K>
NumberTable<K> number_table_from_json(const Json& j) {
    return {family_from_json(j), values_from_json<K>(j.at("values"))};
}

template <ExactField K>
Json to_json(const BasisExpansion<K>& e) {
    return Json{{"basis", to_json(e.basis)}, {"coeffs", values_to_json(e.coeffs)}};
}

template <ExactField K>
BasisExpansion<K> expansion_from_json(const Json& j) {
    return {family_from_json(j.at("basis")), values_from_json<K>(j.at("coeffs"))};
}

template <ExactField K>
Json to_json(const CarlitzPoly<K>& p) {
    return Json{{"variable", "q^x"}, {"coeffs", values_to_json(p.in_y.coeffs())}};
}

template <ExactField K>
CarlitzPoly<K> carlitz_from_json(const Json& j) {
    if (j.at("variable") != "q^x") throw ParseError(0, {"\"q^x\""}, "unexpected variable tag");
    return {Poly<K>(values_from_json<K>(j.at("coeffs")))};
}

}  // namespace qfe
