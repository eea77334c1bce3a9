#pragma once

#include <vector>

#include "kk/poly.hpp"
#include "kk/root_system.hpp"
#include "kk/weyl.hpp"

namespace kk {

// Element of the fraction field restricted to the shape the nil-Hecke
// computations produce: numerator in Q[a1..an], denominator a multiset of
// positive roots (signs and scalars absorbed into the numerator).
//
// Invariant after normalize(): no denominator root divides the numerator,
// and zero is stored as numerator 0 with empty denominator.
class RationalFunction {
public:
    RationalFunction() : rs_(nullptr) {}
    explicit RationalFunction(const RootSystem& rs)
        : rs_(&rs), num_(Polynomial(rs.rank())) {}
    RationalFunction(const RootSystem& rs, Polynomial num)
        : rs_(&rs), num_(std::move(num)) {
        normalize();
    }
    RationalFunction(const RootSystem& rs, Polynomial num, std::vector<int> den)
        : rs_(&rs), num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction constant(const RootSystem& rs, const Rat& c) {
        return RationalFunction(rs, Polynomial::constant(rs.rank(), c));
    }

    const RootSystem& system() const { return *rs_; }
    const Polynomial& numerator() const { return num_; }
    const std::vector<int>& denominator() const { return den_; }  // sorted root ids
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator*=(const Rat& c) {
        num_ *= c;
        if (num_.is_zero()) den_.clear();
        return *this;
    }

    // Multiply by 1/(sign * root). The only division the nil-Hecke recursions
    // ever need; keeps the denominator a root multiset by construction.
    RationalFunction div_by_signed_root(const SignedRoot& sr) const;
    RationalFunction mul_poly(const Polynomial& p) const;

    // Reciprocal; defined only when the numerator is a nonzero constant
    // (the diagonal coefficients c(w,w) have this shape).
    RationalFunction reciprocal_of_constant_numerator() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string to_string() const;

    void normalize();

private:
    const RootSystem* rs_;
    Polynomial num_;
    std::vector<int> den_;
};

// w acting on polynomials by substituting the expansion of w(a_i) for a_i;
// ring homomorphism, (uv).p = u.(v.p).
Polynomial weyl_act(const RootSystem& rs, const GroupElement& w, const Polynomial& p);
RationalFunction weyl_act(const RootSystem& rs, const GroupElement& w,
                          const RationalFunction& f);

}  // namespace kk
