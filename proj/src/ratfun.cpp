#include "kk/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace kk {

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end());
    // Cancel every denominator root that exactly divides the numerator.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < den_.size(); ++k) {
            auto [q, ok] = divide_by_linear(num_, rs_->linear_form(den_[k]));
            if (ok) {
                num_ = std::move(q);
                den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
        }
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (rs_ != o.rs_) throw std::invalid_argument("rational functions over different systems");
    // Least common denominator as a multiset of roots.
    std::vector<int> lcm;
    std::vector<int> extra_self, extra_other;  // factors missing from each side
    std::size_t i = 0, j = 0;
    auto take = [&](int id, int which) {
        lcm.push_back(id);
        if (which > 0) extra_self.push_back(id);
        if (which < 0) extra_other.push_back(id);
    };
    while (i < den_.size() || j < o.den_.size()) {
        if (j == o.den_.size() || (i < den_.size() && den_[i] < o.den_[j])) {
            take(den_[i++], -1);
        } else if (i == den_.size() || o.den_[j] < den_[i]) {
            take(o.den_[j++], +1);
        } else {
            take(den_[i], 0);
            ++i;
            ++j;
        }
    }
    Polynomial a = num_;
    for (int id : extra_self) a = a * rs_->linear_form(id);
    Polynomial b = o.num_;
    for (int id : extra_other) b = b * rs_->linear_form(id);
    num_ = a + b;
    den_ = std::move(lcm);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero())
        return RationalFunction(a.rs_ ? *a.rs_ : *b.rs_);
    if (a.rs_ != b.rs_) throw std::invalid_argument("rational functions over different systems");
    RationalFunction r(*a.rs_);
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    r.normalize();
    return r;
}

RationalFunction RationalFunction::div_by_signed_root(const SignedRoot& sr) const {
    if (is_zero()) return *this;
    RationalFunction r = *this;
    if (sr.sign < 0) r.num_ = -r.num_;
    r.den_.push_back(sr.id);
    r.normalize();
    return r;
}

RationalFunction RationalFunction::mul_poly(const Polynomial& p) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * p;
    r.normalize();
    return r;
}

RationalFunction RationalFunction::reciprocal_of_constant_numerator() const {
    if (!num_.is_constant() || num_.is_zero())
        throw std::logic_error("reciprocal requires a nonzero constant numerator");
    const Rat c = num_.leading().second;
    Polynomial n = Polynomial::constant(rs_->rank(), Rat(1) / c);
    for (int id : den_) n = n * rs_->linear_form(id);
    return RationalFunction(*rs_, std::move(n));
}

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (den_.empty()) {
        os << num_.to_string();
        return os.str();
    }
    bool wrap_num = num_.term_count() > 1;
    if (wrap_num)
        os << "(" << num_.to_string() << ")";
    else
        os << num_.to_string();
    os << " / (";
    for (std::size_t k = 0; k < den_.size(); ++k) {
        if (k) os << "*";
        std::string f = rs_->linear_form(den_[k]).to_string();
        if (rs_->linear_form(den_[k]).term_count() > 1)
            os << "(" << f << ")";
        else
            os << f;
    }
    os << ")";
    return os.str();
}

Polynomial weyl_act(const RootSystem& rs, const GroupElement& w, const Polynomial& p) {
    if (p.nvars() != rs.rank()) throw std::invalid_argument("polynomial arity mismatch");
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(rs.rank()));
    for (int i = 1; i <= rs.rank(); ++i) {
        SignedRoot sr = act_on_root(rs, w, rs.simple_root_id(i));
        Polynomial f = rs.linear_form(sr.id);
        if (sr.sign < 0) f = -f;
        images.push_back(std::move(f));
    }
    return substitute(p, images);
}

RationalFunction weyl_act(const RootSystem& rs, const GroupElement& w,
                          const RationalFunction& f) {
    if (f.is_zero()) return f;
    Polynomial num = weyl_act(rs, w, f.numerator());
    std::vector<int> den;
    for (int id : f.denominator()) {
        SignedRoot sr = act_on_root(rs, w, id);
        if (sr.sign < 0) num = -num;
        den.push_back(sr.id);
    }
    return RationalFunction(rs, std::move(num), std::move(den));
}

}  // namespace kk
