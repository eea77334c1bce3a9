#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kk/rational.hpp"

namespace kk {

// Exponent vector of a monomial; entry i is the exponent of variable a_{i+1}.
using Mono = std::vector<int32_t>;

inline int32_t mono_degree(const Mono& m) {
    int32_t d = 0;
    for (int32_t e : m) d += e;
    return d;
}

// Graded lexicographic with a1 > a2 > ... > an, largest term first.
// This is the canonical term order for storage, printing and division.
struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        int32_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return a.size() > b.size();
    }
};

// Sparse multivariate polynomial over Q in variables a1..an.
// Invariant: no zero coefficients are stored; equality is structural.
class Polynomial {
public:
    using TermMap = std::map<Mono, Rat, GrlexDesc>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rat& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace(Mono(nvars, 0), c);
        return p;
    }
    // 1-based variable index.
    static Polynomial variable(int nvars, int i) {
        if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
        Polynomial p(nvars);
        Mono m(nvars, 0);
        m[i - 1] = 1;
        p.terms_.emplace(std::move(m), Rat(1));
        return p;
    }
    static Polynomial monomial(int nvars, Mono m, const Rat& c) {
        if (static_cast<int>(m.size()) != nvars)
            throw std::invalid_argument("monomial arity mismatch");
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    int32_t degree() const {  // total degree; -1 for the zero polynomial
        return terms_.empty() ? -1 : mono_degree(terms_.begin()->first);
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading term in graded lex; polynomial must be nonzero.
    const std::pair<const Mono, Rat>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_arity(b);
        Polynomial r(a.nvars_);
        Mono m(a.nvars_, 0);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        Polynomial r = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    // Canonical text: terms in descending graded lex, e.g. "a1^2*a2 - 1/2*a2".
    std::string to_string(const std::string& stem = "a") const;

private:
    void check_arity(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

// Substitutes images[i] for variable a_{i+1}. Ring homomorphism.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

// Exact division of p by a linear form L (total degree 1, no constant term
// required). Returns {quotient, true} iff p == quotient * L in the ring;
// the quotient is meaningless when the flag is false.
std::pair<Polynomial, bool> divide_by_linear(const Polynomial& p, const Polynomial& linear);

}  // namespace kk
