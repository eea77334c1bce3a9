#include "kk/poly.hpp"

#include <sstream>

namespace kk {

std::string Polynomial::to_string(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += stem + std::to_string(i + 1);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            os << rat_string(a);
        } else if (a == 1) {
            os << vars;
        } else {
            os << rat_string(a) << "*" << vars;
        }
    }
    return os.str();
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitute: one image per variable required");
    const int nv = images.empty() ? 0 : images.front().nvars();
    Polynomial out(nv);
    // Per-variable power cache; exponents stay small in this library.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, int32_t e) -> const Polynomial& {
        auto& tab = powers[i];
        if (tab.empty()) tab.push_back(Polynomial::constant(nv, 1));
        while (static_cast<int32_t>(tab.size()) <= e) tab.push_back(tab.back() * images[i]);
        return tab[e];
    };
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(nv, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        out += t;
    }
    return out;
}

std::pair<Polynomial, bool> divide_by_linear(const Polynomial& p, const Polynomial& linear) {
    if (linear.is_zero() || linear.degree() != 1)
        throw std::invalid_argument("divide_by_linear: divisor must be a nonzero linear form");
    const auto& [lm, lc] = linear.leading();
    int lead_var = -1;
    for (std::size_t i = 0; i < lm.size(); ++i)
        if (lm[i] == 1) lead_var = static_cast<int>(i);
    Polynomial q(p.nvars());
    Polynomial r = p;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (rm[lead_var] == 0) return {q, false};
        Mono qm = rm;
        qm[lead_var] -= 1;
        Rat qc = rc / lc;
        q.add_term(qm, qc);
        r -= Polynomial::monomial(p.nvars(), qm, qc) * linear;
    }
    return {q, true};
}

}  // namespace kk
