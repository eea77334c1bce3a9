#pragma once

#include <json.hpp>

#include "kk/poly.hpp"
#include "kk/ratfun.hpp"

namespace kk {

// {"vars":["a1",...],"terms":[{"c":"1/2","e":[2,1,0]},...]}, terms in
// descending graded lex.
inline nlohmann::ordered_json poly_to_json(const Polynomial& p) {
    nlohmann::ordered_json j;
    auto vars = nlohmann::ordered_json::array();
    for (int i = 1; i <= p.nvars(); ++i) vars.push_back("a" + std::to_string(i));
    j["vars"] = vars;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["c"] = rat_string(c);
        t["e"] = m;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

// Adds "den": sorted list of 1-based positive-root ids (the order printed by
// the roots subcommand) for the denominator multiset.
inline nlohmann::ordered_json ratfun_to_json(const RationalFunction& f) {
    nlohmann::ordered_json j = poly_to_json(f.numerator());
    auto den = nlohmann::ordered_json::array();
    for (int id : f.denominator()) den.push_back(id + 1);
    j["den"] = den;
    return j;
}

}  // namespace kk
