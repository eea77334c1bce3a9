#pragma once

#include <map>
#include <vector>

#include "kk/ratfun.hpp"
#include "kk/weyl.hpp"

namespace kk {

// Element of the nil-Hecke ring in the delta basis: a finite map from group
// elements to rational-function coefficients (zeros never stored).
// Multiplication rule: f d_v * g d_w = f v(g) d_{vw}.
class NilHeckeElement {
public:
    using CoeffMap = std::map<GroupElement, RationalFunction, PrecLess>;

    NilHeckeElement() : rs_(nullptr) {}
    explicit NilHeckeElement(const RootSystem& rs) : rs_(&rs) {}

    const RootSystem& system() const { return *rs_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    RationalFunction coeff(const GroupElement& v) const {
        auto it = coeffs_.find(v);
        return it == coeffs_.end() ? RationalFunction(*rs_) : it->second;
    }
    void add_coeff(const GroupElement& v, const RationalFunction& f) {
        if (f.is_zero()) return;
        auto it = coeffs_.find(v);
        if (it == coeffs_.end()) {
            coeffs_.emplace(v, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend bool operator==(const NilHeckeElement& a, const NilHeckeElement& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const NilHeckeElement& a, const NilHeckeElement& b) {
        return !(a == b);
    }

private:
    const RootSystem* rs_;
    CoeffMap coeffs_;
};

struct KKPolynomial {
    GroupElement element;
    Polynomial value;  // (-1)^{l(w)} * c_{w,id} * prod of all positive roots
};

NilHeckeElement delta(const RootSystem& rs, const GroupElement& w);
NilHeckeElement x_gen(const RootSystem& rs, int i);  // a_i^{-1}(d_{s_i} - d_id)

NilHeckeElement multiply(const NilHeckeElement& e, const NilHeckeElement& f);
// Right multiplication by x_i, the workhorse of x_of.
NilHeckeElement multiply_x(const NilHeckeElement& e, int i);

// Product of x_{i_1}..x_{i_l} over a reduced word of w; independent of the
// chosen reduced word. Support is contained in the Bruhat interval [id, w].
NilHeckeElement x_of(const RootSystem& rs, const GroupElement& w);
NilHeckeElement x_of_word(const RootSystem& rs, const std::vector<int>& letters);

// c_{w,v}: the coefficient of d_v in x_of(w) normalized by (-1)^{l(w)}.
// Zero iff v is not below w in Bruhat order.
RationalFunction c_of(const RootSystem& rs, const GroupElement& w, const GroupElement& v);

// Independent oracle: the sum over 0/1 sequences (e_1..e_l) multiplying to v
// of the products 1/(s_{i_1}^{e_1}..s_{i_k}^{e_k} a_{i_k}); exponential in
// the word length, meant for short words. Equals c_of on reduced words.
RationalFunction c_subword_oracle(const RootSystem& rs, const std::vector<int>& letters,
                                  const GroupElement& v);

// Memoized descent recursion c_{w,v} = v(a_i)^{-1}(c_{ws_i,v} + c_{ws_i,vs_i}),
// the recursion satisfied by the normalized coefficients.
class CRecursionCache {
public:
    std::map<std::pair<std::vector<int>, std::vector<int>>, RationalFunction> memo;
};
RationalFunction c_recursive(const RootSystem& rs, const GroupElement& w, const GroupElement& v,
                             CRecursionCache& cache);
RationalFunction c_recursive(const RootSystem& rs, const GroupElement& w, const GroupElement& v);

// Kostant-Kumar polynomial d_w = (-1)^{l(w)} c_{w,id} prod_{a>0} a.
// Throws std::logic_error if the result fails to normalize to a polynomial,
// which would signal an arithmetic bug rather than a legal outcome.
KKPolynomial kk_polynomial(const RootSystem& rs, const GroupElement& w);

struct DyerResult {
    Polynomial g;
    bool ok;
};
// c_{w,v} * prod{a>0 : s_a v <= w} a must be a polynomial g_{w,v}.
DyerResult dyer_check(const RootSystem& rs, const GroupElement& w, const GroupElement& v);

// Coefficients d_{w,v} of the inverse expansion delta_w = sum d_{w,v} x_v,
// solved on the Bruhat interval [id, w] by back substitution.
NilHeckeElement::CoeffMap delta_in_x_basis(const RootSystem& rs, const GroupElement& w);

}  // namespace kk
