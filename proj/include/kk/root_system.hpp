#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kk/poly.hpp"

namespace kk {

enum class Kind { A, B, C };

inline char kind_char(Kind k) { return k == Kind::A ? 'A' : (k == Kind::B ? 'B' : 'C'); }
Kind kind_from_string(const std::string& s);

// A positive root, stored both in the simple-root basis (alpha, length rank)
// and in the epsilon basis (eps, length = carrier of the permutation action:
// rank for B/C, rank+1 for A).
struct Root {
    std::vector<int> alpha;
    std::vector<int> eps;
};

// Positive root with a sign, the result of applying a Weyl group element.
struct SignedRoot {
    int id;    // index into RootSystem::positive_roots()
    int sign;  // +1 or -1
};

// Root systems of types A_n (n>=1), B_n and C_n (n>=2).
//
// Positive roots are enumerated in a fixed order: ascending column, and
// within column i first e_i-e_{i+1}, ..., e_i-e_n, then e_i (B) or 2e_i (C),
// then e_i+e_n, ..., e_i+e_{i+1}.  Type A lists e_i-e_j by ascending j.
// This order is frozen; root ids in all output refer to it (1-based in text).
class RootSystem {
public:
    static RootSystem build(Kind kind, int rank);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    // Number of letters the Weyl group permutes: rank for B/C, rank+1 for A.
    int carrier() const { return kind_ == Kind::A ? rank_ + 1 : rank_; }

    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& root(int id) const { return roots_.at(id); }
    int root_count() const { return static_cast<int>(roots_.size()); }
    int simple_root_id(int i) const;  // 1-based simple index -> root id

    // Identifies an epsilon-coordinate vector as +/- a positive root.
    SignedRoot classify_eps(const std::vector<int>& eps) const;

    // Section 2.2 bookkeeping, defined for B/C only.
    std::pair<int, int> row_col(int id) const;
    std::vector<int> column_set(int k) const;  // ids with col = k
    std::vector<int> row_set(int k) const;     // ids with row = k

    // s_alpha(beta) as a signed positive root.
    SignedRoot reflect(int alpha_id, int beta_id) const;

    // Linear form of a root in the polynomial ring Q[a1..an].
    Polynomial linear_form(int id) const;
    // Product of all positive roots as a polynomial.
    Polynomial positive_product() const;

    std::string eps_string(int id) const;    // "e1-e2", "e1+e2", "2e1", "e3"
    std::string alpha_string(int id) const;  // "a1+2*a2"

private:
    RootSystem() = default;
    Kind kind_ = Kind::A;
    int rank_ = 0;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> eps_index_;
};

}  // namespace kk
