#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkummer/kummer.hpp"
#include "gkummer/numberfield.hpp"
#include "gkummer/polynomial.hpp"
#include "gkummer/rational.hpp"

namespace gkummer {

using Json = nlohmann::ordered_json;

/// Polynomial serialization: {"nvars": n, "terms": [{"exp": [...], "coeff":
/// "num/den"}, ...]} with the term list in graded-lexicographic order. The
/// round trip is bit-exact because both the term order and the coefficient
/// strings are canonical.
inline Json poly_to_json(const RatPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exp = Json::array();
        for (int v = 0; v < p.nvars(); ++v) exp.push_back(e[static_cast<std::size_t>(v)]);
        terms.push_back(Json{{"exp", std::move(exp)}, {"coeff", format_rat(c)}});
    }
    return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline RatPoly poly_from_json(const Json& j) {
    if (!j.contains("nvars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON: missing nvars or terms");
    RatPoly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        const auto& exp = t.at("exp");
        if (static_cast<int>(exp.size()) != p.nvars())
            throw std::invalid_argument("polynomial JSON: exponent arity mismatch");
        ExpVec e{};
        for (std::size_t v = 0; v < exp.size(); ++v) {
            int ev = exp[v].get<int>();
            if (ev < 0) throw std::invalid_argument("polynomial JSON: negative exponent");
            e[v] = ev;
        }
        p.add_term(e, parse_rat(t.at("coeff").get<std::string>()));
    }
    return p;
}

/// Kummer model file: the polynomial JSON plus its bad primes.
inline Json model_to_json(const KummerModel& model) {
    Json j = poly_to_json(model.g());
    Json bad = Json::array();
    for (auto p : model.bad_primes()) bad.push_back(p);
    j["bad_primes"] = std::move(bad);
    return j;
}

inline NFElem nfelem_from_json(const FieldPtr& field, const Json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != field->degree())
        throw std::invalid_argument("curve JSON: coefficient must list one rational per basis power");
    std::vector<Rat> coords;
    for (const auto& c : j) coords.push_back(parse_rat(c.get<std::string>()));
    return NFElem(field, std::move(coords));
}

inline Json nfelem_to_json(const NFElem& e) {
    Json out = Json::array();
    for (const auto& c : e.coords()) out.push_back(format_rat(c));
    return out;
}

/// Curve spec: {"label": ..., "minpoly": [c0,...,1], "a": {"a1": [...], ...}}
/// with each number-field element as an array of "num/den" strings in
/// power-basis order.
inline WeierstrassCurve curve_from_json(const Json& j) {
    if (!j.contains("minpoly") || !j.contains("a"))
        throw std::invalid_argument("curve JSON: missing minpoly or a");
    std::vector<Int> mp;
    for (const auto& c : j.at("minpoly")) {
        if (c.is_string())
            mp.emplace_back(c.get<std::string>());
        else
            mp.emplace_back(c.get<long long>());
    }
    FieldPtr field = NumberField::create(std::move(mp));
    const auto& a = j.at("a");
    std::string label = j.value("label", std::string{});
    return WeierstrassCurve(field, nfelem_from_json(field, a.at("a1")),
                            nfelem_from_json(field, a.at("a2")),
                            nfelem_from_json(field, a.at("a3")),
                            nfelem_from_json(field, a.at("a4")),
                            nfelem_from_json(field, a.at("a6")), label);
}

inline Json curve_to_json(const WeierstrassCurve& curve) {
    Json mp = Json::array();
    for (const auto& c : curve.field()->minpoly().coeffs()) mp.push_back(static_cast<long long>(c));
    return Json{{"label", curve.label()},
                {"minpoly", std::move(mp)},
                {"a",
                 Json{{"a1", nfelem_to_json(curve.a1())},
                      {"a2", nfelem_to_json(curve.a2())},
                      {"a3", nfelem_to_json(curve.a3())},
                      {"a4", nfelem_to_json(curve.a4())},
                      {"a6", nfelem_to_json(curve.a6())}}}};
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace gkummer
