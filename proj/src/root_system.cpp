#include "kk/root_system.hpp"

#include <numeric>
#include <sstream>

namespace kk {

Kind kind_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Kind::A;
    if (s == "B" || s == "b") return Kind::B;
    if (s == "C" || s == "c") return Kind::C;
    throw std::invalid_argument("unknown type '" + s + "', expected A, B or C");
}

namespace {

std::vector<int> eps_diff(int carrier, int i, int j) {  // e_i - e_j
    std::vector<int> v(carrier, 0);
    v[i - 1] += 1;
    v[j - 1] -= 1;
    return v;
}
std::vector<int> eps_sum(int carrier, int i, int j) {  // e_i + e_j
    std::vector<int> v(carrier, 0);
    v[i - 1] += 1;
    v[j - 1] += 1;
    return v;
}
std::vector<int> eps_single(int carrier, int i, int scale) {  // scale * e_i
    std::vector<int> v(carrier, 0);
    v[i - 1] = scale;
    return v;
}

// alpha coordinates from the explicit expansions per kind.
std::vector<int> alpha_ij_chain(int rank, int i, int j) {  // a_i + ... + a_{j-1}
    std::vector<int> v(rank, 0);
    for (int k = i; k < j; ++k) v[k - 1] += 1;
    return v;
}

}  // namespace

RootSystem RootSystem::build(Kind kind, int rank) {
    if (kind == Kind::A) {
        if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
    } else {
        if (rank < 2) throw std::invalid_argument("types B and C require rank >= 2");
    }
    RootSystem rs;
    rs.kind_ = kind;
    rs.rank_ = rank;
    const int n = rank;
    const int carrier = rs.carrier();

    auto push = [&](std::vector<int> alpha, std::vector<int> eps) {
        rs.eps_index_.emplace(eps, static_cast<int>(rs.roots_.size()));
        rs.roots_.push_back(Root{std::move(alpha), std::move(eps)});
    };

    if (kind == Kind::A) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j)
                push(alpha_ij_chain(n, i, j), eps_diff(carrier, i, j));
        return rs;
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j)  // e_i - e_j
            push(alpha_ij_chain(n, i, j), eps_diff(carrier, i, j));
        if (kind == Kind::B) {  // e_i = a_i + ... + a_n
            std::vector<int> a(n, 0);
            for (int k = i; k <= n; ++k) a[k - 1] = 1;
            push(std::move(a), eps_single(carrier, i, 1));
        } else {  // 2e_i = 2(a_i + ... + a_{n-1}) + a_n
            std::vector<int> a(n, 0);
            for (int k = i; k <= n - 1; ++k) a[k - 1] = 2;
            a[n - 1] = 1;
            push(std::move(a), eps_single(carrier, i, 2));
        }
        for (int j = n; j > i; --j) {  // e_i + e_j, descending j
            std::vector<int> a(n, 0);
            if (kind == Kind::B) {
                // (a_i+...+a_{j-1}) + 2(a_j+...+a_n)
                for (int k = i; k < j; ++k) a[k - 1] += 1;
                for (int k = j; k <= n; ++k) a[k - 1] += 2;
            } else {
                // (a_i+...+a_{n-1}) + (a_j+...+a_{n-1}) + a_n
                for (int k = i; k <= n - 1; ++k) a[k - 1] += 1;
                for (int k = j; k <= n - 1; ++k) a[k - 1] += 1;
                a[n - 1] += 1;
            }
            push(std::move(a), eps_sum(carrier, i, j));
        }
    }
    return rs;
}

int RootSystem::simple_root_id(int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
    std::vector<int> eps;
    if (kind_ == Kind::A || i < rank_) {
        eps = eps_diff(carrier(), i, i + 1);
    } else if (kind_ == Kind::B) {
        eps = eps_single(carrier(), rank_, 1);
    } else {
        eps = eps_single(carrier(), rank_, 2);
    }
    return eps_index_.at(eps);
}

SignedRoot RootSystem::classify_eps(const std::vector<int>& eps) const {
    auto it = eps_index_.find(eps);
    if (it != eps_index_.end()) return {it->second, +1};
    std::vector<int> neg(eps.size());
    for (std::size_t k = 0; k < eps.size(); ++k) neg[k] = -eps[k];
    it = eps_index_.find(neg);
    if (it != eps_index_.end()) return {it->second, -1};
    throw std::invalid_argument("vector is not a root of this system");
}

std::pair<int, int> RootSystem::row_col(int id) const {
    if (kind_ == Kind::A)
        throw std::invalid_argument("row/col maps are defined for types B and C only");
    const auto& e = root(id).eps;
    int i = 0, j = 0;
    for (int k = 0; k < static_cast<int>(e.size()); ++k) {
        if (e[k] != 0) {
            if (i == 0)
                i = k + 1;
            else
                j = k + 1;
        }
    }
    if (j == 0) {                                    // e_i or 2e_i
        return {e[i - 1] == 2 ? -i : 0, i};          // row(2e_i) = -i, row(e_i) = 0
    }
    return {e[j - 1] > 0 ? -j : j, i};               // row(e_i+e_j) = -j, row(e_i-e_j) = j
}

std::vector<int> RootSystem::column_set(int k) const {
    std::vector<int> ids;
    for (int id = 0; id < root_count(); ++id)
        if (row_col(id).second == k) ids.push_back(id);
    return ids;
}

std::vector<int> RootSystem::row_set(int k) const {
    std::vector<int> ids;
    for (int id = 0; id < root_count(); ++id)
        if (row_col(id).first == k) ids.push_back(id);
    return ids;
}

SignedRoot RootSystem::reflect(int alpha_id, int beta_id) const {
    const auto& a = root(alpha_id).eps;
    const auto& b = root(beta_id).eps;
    long ab = 0, aa = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ab += static_cast<long>(a[k]) * b[k];
        aa += static_cast<long>(a[k]) * a[k];
    }
    // 2(b,a)/(a,a) is an integer for crystallographic systems.
    if ((2 * ab) % aa != 0) throw std::logic_error("non-integral Cartan pairing");
    long c = 2 * ab / aa;
    std::vector<int> out(b);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] -= static_cast<int>(c) * a[k];
    return classify_eps(out);
}

Polynomial RootSystem::linear_form(int id) const {
    Polynomial p(rank_);
    const auto& a = root(id).alpha;
    for (int i = 0; i < rank_; ++i)
        if (a[i] != 0) {
            Mono m(rank_, 0);
            m[i] = 1;
            p.add_term(m, Rat(a[i]));
        }
    return p;
}

Polynomial RootSystem::positive_product() const {
    Polynomial p = Polynomial::constant(rank_, 1);
    for (int id = 0; id < root_count(); ++id) p = p * linear_form(id);
    return p;
}

std::string RootSystem::eps_string(int id) const {
    const auto& e = root(id).eps;
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!first) os << (e[k] > 0 ? "+" : "-");
        else if (e[k] < 0) os << "-";
        int m = e[k] > 0 ? e[k] : -e[k];
        if (m != 1) os << m;
        os << "e" << (k + 1);
        first = false;
    }
    return os.str();
}

std::string RootSystem::alpha_string(int id) const {
    const auto& a = root(id).alpha;
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        if (a[i] != 1) os << a[i] << "*";
        os << "a" << (i + 1);
        first = false;
    }
    return os.str();
}

}  // namespace kk
