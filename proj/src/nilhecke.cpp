#include "kk/nilhecke.hpp"

#include <algorithm>

namespace kk {

NilHeckeElement delta(const RootSystem& rs, const GroupElement& w) {
    NilHeckeElement e(rs);
    e.add_coeff(w, RationalFunction::constant(rs, 1));
    return e;
}

NilHeckeElement x_gen(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("generator index out of range");
    NilHeckeElement e(rs);
    SignedRoot a{rs.simple_root_id(i), +1};
    RationalFunction one = RationalFunction::constant(rs, 1);
    e.add_coeff(simple_reflection(rs, i), one.div_by_signed_root(a));
    e.add_coeff(identity_element(rs), (-one).div_by_signed_root(a));
    return e;
}

NilHeckeElement multiply(const NilHeckeElement& e, const NilHeckeElement& f) {
    const RootSystem& rs = e.system();
    NilHeckeElement out(rs);
    for (const auto& [v, fv] : e.coeffs()) {
        for (const auto& [w, gw] : f.coeffs()) {
            out.add_coeff(compose(v, w), fv * weyl_act(rs, v, gw));
        }
    }
    return out;
}

NilHeckeElement multiply_x(const NilHeckeElement& e, int i) {
    const RootSystem& rs = e.system();
    const int alpha_id = rs.simple_root_id(i);
    const GroupElement si = simple_reflection(rs, i);
    NilHeckeElement out(rs);
    for (const auto& [v, f] : e.coeffs()) {
        // f d_v * x_i = f v(a_i)^{-1} (d_{v s_i} - d_v)
        RationalFunction t = f.div_by_signed_root(act_on_root(rs, v, alpha_id));
        out.add_coeff(compose(v, si), t);
        out.add_coeff(v, -t);
    }
    return out;
}

NilHeckeElement x_of_word(const RootSystem& rs, const std::vector<int>& letters) {
    NilHeckeElement e = delta(rs, identity_element(rs));
    for (int i : letters) e = multiply_x(e, i);
    return e;
}

NilHeckeElement x_of(const RootSystem& rs, const GroupElement& w) {
    return x_of_word(rs, reduced_word(rs, w).letters);
}

RationalFunction c_of(const RootSystem& rs, const GroupElement& w, const GroupElement& v) {
    Word word = reduced_word(rs, w);
    RationalFunction c = x_of_word(rs, word.letters).coeff(v);
    if (word.letters.size() % 2 == 1) c = -c;
    return c;
}

namespace {

void subword_dfs(const RootSystem& rs, const std::vector<int>& letters, std::size_t k,
                 const GroupElement& prefix, const RationalFunction& partial,
                 const GroupElement& v, RationalFunction& sum) {
    if (k == letters.size()) {
        if (prefix == v) sum += partial;
        return;
    }
    const int alpha_id = rs.simple_root_id(letters[k]);
    // epsilon_k = 0: factor 1 / (prefix(a_{i_k}))
    subword_dfs(rs, letters, k + 1, prefix,
                partial.div_by_signed_root(act_on_root(rs, prefix, alpha_id)), v, sum);
    // epsilon_k = 1: factor 1 / ((prefix s_{i_k})(a_{i_k}))
    GroupElement next = compose(prefix, simple_reflection(rs, letters[k]));
    subword_dfs(rs, letters, k + 1, next,
                partial.div_by_signed_root(act_on_root(rs, next, alpha_id)), v, sum);
}

}  // namespace

RationalFunction c_subword_oracle(const RootSystem& rs, const std::vector<int>& letters,
                                  const GroupElement& v) {
    GroupElement w = from_word(rs, letters);
    if (length(rs, w) != static_cast<int>(letters.size()))
        throw std::invalid_argument("c_subword_oracle requires a reduced word");
    RationalFunction sum(rs);
    subword_dfs(rs, letters, 0, identity_element(rs), RationalFunction::constant(rs, 1), v, sum);
    return sum;
}

RationalFunction c_recursive(const RootSystem& rs, const GroupElement& w, const GroupElement& v,
                             CRecursionCache& cache) {
    if (w.is_identity())
        return v.is_identity() ? RationalFunction::constant(rs, 1) : RationalFunction(rs);
    auto key = std::make_pair(w.img, v.img);
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;
    int i = 0;
    for (int k = 1; k <= rs.rank(); ++k)
        if (right_descent(w, k)) {
            i = k;
            break;
        }
    const GroupElement si = simple_reflection(rs, i);
    const GroupElement ws = compose(w, si);
    RationalFunction t =
        c_recursive(rs, ws, v, cache) + c_recursive(rs, ws, compose(v, si), cache);
    RationalFunction res(rs);
    if (!t.is_zero())
        res = t.div_by_signed_root(act_on_root(rs, v, rs.simple_root_id(i)));
    cache.memo.emplace(std::move(key), res);
    return res;
}

RationalFunction c_recursive(const RootSystem& rs, const GroupElement& w, const GroupElement& v) {
    CRecursionCache cache;
    return c_recursive(rs, w, v, cache);
}

KKPolynomial kk_polynomial(const RootSystem& rs, const GroupElement& w) {
    // (-1)^{l(w)} c_{w,id} prod_{a>0} a; the sign cancels against the
    // normalization carried by c_of, so the raw coefficient of d_id in
    // x_of(w) times the positive-root product gives the value directly.
    RationalFunction c = x_of(rs, w).coeff(identity_element(rs));
    if (c.is_zero()) throw std::logic_error("c_{w,id} vanished, which contradicts id <= w");
    const auto& den = c.denominator();
    for (std::size_t k = 1; k < den.size(); ++k)
        if (den[k] == den[k - 1])
            throw std::logic_error("d_w failed to normalize to a polynomial");
    Polynomial value = c.numerator();
    std::size_t k = 0;
    for (int id = 0; id < rs.root_count(); ++id) {
        if (k < den.size() && den[k] == id) {
            ++k;
            continue;
        }
        value = value * rs.linear_form(id);
    }
    return KKPolynomial{w, std::move(value)};
}

DyerResult dyer_check(const RootSystem& rs, const GroupElement& w, const GroupElement& v) {
    if (!bruhat_leq(v, w))
        throw std::invalid_argument("dyer_check requires v <= w in Bruhat order");
    RationalFunction c = c_of(rs, w, v);
    RationalFunction g = c;
    for (int id = 0; id < rs.root_count(); ++id) {
        if (bruhat_leq(compose(from_reflection(rs, id), v), w))
            g = g.mul_poly(rs.linear_form(id));
    }
    return DyerResult{g.numerator(), g.is_polynomial()};
}

NilHeckeElement::CoeffMap delta_in_x_basis(const RootSystem& rs, const GroupElement& w) {
    // Interval [id, w], with all x_of expansions on it.
    std::vector<GroupElement> interval;
    for (const auto& v : enumerate_group(rs))
        if (bruhat_leq(v, w)) interval.push_back(v);
    std::map<GroupElement, NilHeckeElement, PrecLess> xv;
    for (const auto& v : interval) xv.emplace(v, x_of(rs, v));
    std::sort(interval.begin(), interval.end(),
              [&](const GroupElement& a, const GroupElement& b) {
                  int la = length(rs, a), lb = length(rs, b);
                  if (la != lb) return la > lb;
                  return PrecLess{}(a, b);
              });
    // Back substitution on [d_w] = sum_v d_{w,v} [x_v]: the change of basis is
    // triangular with nonzero diagonal c(v,v).
    NilHeckeElement::CoeffMap out;
    for (const auto& u : interval) {
        RationalFunction target =
            (u == w) ? RationalFunction::constant(rs, 1) : RationalFunction(rs);
        for (const auto& [v, dv] : out) {
            RationalFunction cvu = xv.at(v).coeff(u);
            if (!cvu.is_zero()) target -= dv * cvu;
        }
        RationalFunction duu = xv.at(u).coeff(u).reciprocal_of_constant_numerator();
        RationalFunction d = target * duu;
        if (!d.is_zero()) out.emplace(u, std::move(d));
    }
    return out;
}

}  // namespace kk
