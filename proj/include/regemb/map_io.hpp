#pragma once

// JSON wire format for polynomial maps:
//   {"arity": d,
//    "components": [ [ [[re_num, re_den, im_num, im_den], [e_1, ..., e_d]], ... ], ... ]}
// one inner list of terms per component, one [coefficient, exponent-vector]
// pair per term.

#include <json.hpp>

#include <regemb/errors.hpp>
#include <regemb/regular.hpp>

namespace regemb {

inline PolyMapC poly_map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("components"))
        throw contract_violation("map json needs 'arity' and 'components'");
    PolyMapC f;
    f.arity = j.at("arity").get<i64>();
    if (f.arity < 1) throw contract_violation("map arity must be >= 1");
    for (const auto& comp : j.at("components")) {
        std::vector<PolyTermC> terms;
        for (const auto& term : comp) {
            if (!term.is_array() || term.size() != 2)
                throw contract_violation("each term is [coefficient, exponent-vector]");
            const auto& c = term[0];
            if (!c.is_array() || c.size() != 4)
                throw contract_violation(
                    "coefficients are [re_num, re_den, im_num, im_den]");
            PolyTermC t;
            t.coeff = gaussian(c[0].get<i64>(), c[1].get<i64>(), c[2].get<i64>(),
                               c[3].get<i64>());
            for (const auto& e : term[1]) {
                i64 exp = e.get<i64>();
                if (exp < 0) throw contract_violation("exponents must be non-negative");
                t.exps.push_back(exp);
            }
            if (static_cast<i64>(t.exps.size()) != f.arity)
                throw contract_violation("exponent vector length must equal arity");
            terms.push_back(std::move(t));
        }
        f.components.push_back(std::move(terms));
    }
    if (f.components.empty()) throw contract_violation("map needs at least one component");
    return f;
}

inline nlohmann::json poly_map_to_json(const PolyMapC& f) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& comp : f.components) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : comp) {
            nlohmann::json coeff = {
                static_cast<i64>(numerator(t.coeff.re).convert_to<long long>()),
                static_cast<i64>(denominator(t.coeff.re).convert_to<long long>()),
                static_cast<i64>(numerator(t.coeff.im).convert_to<long long>()),
                static_cast<i64>(denominator(t.coeff.im).convert_to<long long>())};
            terms.push_back(nlohmann::json::array({coeff, t.exps}));
        }
        components.push_back(terms);
    }
    return {{"arity", f.arity}, {"components", components}};
}

}  // namespace regemb
