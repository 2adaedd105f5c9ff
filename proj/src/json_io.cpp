#include "wronsk/json_io.hpp"

#include "wronsk/errors.hpp"

namespace wronsk {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw UsageError("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number_integer()) malformed(std::string(what) + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["symbols"] = p.symbols()->names();
    Json terms = Json::array();
    for (const Term& t : p.terms()) {
        Json term;
        term["coeff"] = to_string(t.coeff);
        Json exps = Json::array();
        for (std::size_t i = 0; i < t.mono.width(); ++i) exps.push_back(t.mono.exponent(i));
        term["exps"] = std::move(exps);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    const Json& syms = field(j, "symbols");
    if (!syms.is_array()) malformed("'symbols' must be an array");
    std::vector<std::string> names;
    for (const Json& s : syms) {
        if (!s.is_string()) malformed("'symbols' must hold strings");
        names.push_back(s.get<std::string>());
    }
    const SymbolsPtr table = SymbolTable::make(std::move(names));

    const Json& terms = field(j, "terms");
    if (!terms.is_array()) malformed("'terms' must be an array");
    std::vector<Term> parsed;
    for (const Json& t : terms) {
        const Json& coeff = field(t, "coeff");
        if (!coeff.is_string()) malformed("'coeff' must be a string");
        const std::vector<int> exps = int_array(field(t, "exps"), "'exps'");
        if (exps.size() != table->size()) malformed("'exps' width mismatch");
        parsed.push_back(
            {Monomial::from_exponents(exps), parse_rational(coeff.get<std::string>())});
    }
    return Polynomial::from_terms(table, std::move(parsed));
}

Json series_to_json(const DividedSeries& f) {
    Json j;
    j["order"] = f.order();
    if (f.symbols()->size() > 0) j["symbols"] = f.symbols()->names();
    Json coeffs = Json::array();
    for (const Polynomial& c : f.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = std::move(coeffs);
    return j;
}

DividedSeries series_from_json(const Json& j) {
    const Json& order = field(j, "order");
    if (!order.is_number_integer() || order.get<int>() < 0)
        malformed("'order' must be a nonnegative integer");

    SymbolsPtr table = SymbolTable::scalars();
    if (j.contains("symbols")) {
        std::vector<std::string> names;
        for (const Json& s : j.at("symbols")) {
            if (!s.is_string()) malformed("'symbols' must hold strings");
            names.push_back(s.get<std::string>());
        }
        table = SymbolTable::make(std::move(names));
    }

    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) malformed("'coeffs' must be an array");
    if (static_cast<int>(coeffs.size()) != order.get<int>() + 1)
        malformed("'coeffs' must hold exactly order+1 entries");
    std::vector<Polynomial> parsed;
    parsed.reserve(coeffs.size());
    for (const Json& c : coeffs) {
        if (!c.is_string()) malformed("'coeffs' must hold strings");
        parsed.push_back(parse_polynomial(table, c.get<std::string>()));
    }
    return DividedSeries(table, std::move(parsed));
}

Json expansion_to_json(const SchurExpansion& x) {
    Json j;
    Json terms = Json::array();
    for (const auto& [shape, coeff] : x.terms()) {
        Json term;
        term["partition"] = shape.parts();
        term["coeff"] = to_string(coeff);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

SchurExpansion expansion_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) malformed("'terms' must be an array");
    SchurExpansion out;
    for (const Json& t : terms) {
        const std::vector<int> parts = int_array(field(t, "partition"), "'partition'");
        const Json& coeff = field(t, "coeff");
        if (!coeff.is_string()) malformed("'coeff' must be a string");
        out.add(Partition(parts), parse_rational(coeff.get<std::string>()));
    }
    return out;
}

} // namespace wronsk
