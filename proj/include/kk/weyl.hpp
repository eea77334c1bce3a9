#pragma once

#include <set>
#include <string>
#include <vector>

#include "kk/root_system.hpp"

namespace kk {

// An element of W(A/B/C) as the bottom row of two-line notation:
// img[i-1] = w(i) for i = 1..carrier, with w(-i) = -w(i) implicit.
// Type A elements carry only positive images.
struct GroupElement {
    Kind kind = Kind::A;
    int rank = 0;
    std::vector<int> img;

    int carrier() const { return static_cast<int>(img.size()); }
    int operator()(int i) const {  // signed application
        return i > 0 ? img[i - 1] : -img[-i - 1];
    }
    bool is_identity() const {
        for (int i = 1; i <= carrier(); ++i)
            if (img[i - 1] != i) return false;
        return true;
    }
    bool is_involution() const {
        for (int i = 1; i <= carrier(); ++i)
            if ((*this)((*this)(i)) != i) return false;
        return true;
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.kind == b.kind && a.rank == b.rank && a.img == b.img;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

// The linear order 1 < 2 < ... < n < -n < ... < -1 on signed letters; image
// vectors compare lexicographically under it. Used as the canonical
// enumeration and map order throughout.
inline int prec_key(int value, int carrier) {
    return value > 0 ? value : 2 * carrier + 1 + value;
}

struct PrecLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        const int n = a.carrier();
        for (int i = 0; i < n && i < b.carrier(); ++i) {
            int ka = prec_key(a.img[i], n), kb = prec_key(b.img[i], b.carrier());
            if (ka != kb) return ka < kb;
        }
        return a.carrier() < b.carrier();
    }
};

// Reduced or unreduced word in simple reflections (letters 1..rank).
struct Word {
    std::vector<int> letters;
    bool reduced = false;
};

// SW-rank matrix of the rook placement of w, rows/columns indexed
// 1..n,-n..-1 for B/C (2n x 2n) and 1..N for A (N x N).
struct RankMatrix {
    int size = 0;
    std::vector<int> entries;  // row-major, 1-based positions

    int at(int i, int j) const { return entries[(i - 1) * size + j - 1]; }
    int& at(int i, int j) { return entries[(i - 1) * size + j - 1]; }
    friend bool operator==(const RankMatrix& x, const RankMatrix& y) {
        return x.size == y.size && x.entries == y.entries;
    }
    std::string to_string() const;
};

bool leq_entrywise(const RankMatrix& x, const RankMatrix& y);
RankMatrix strictly_lower(const RankMatrix& r);

GroupElement identity_element(const RootSystem& rs);
GroupElement simple_reflection(const RootSystem& rs, int i);
GroupElement from_reflection(const RootSystem& rs, int root_id);

GroupElement compose(const GroupElement& u, const GroupElement& v);  // (uv)(i) = u(v(i))
GroupElement inverse(const GroupElement& u);

SignedRoot act_on_root(const RootSystem& rs, const GroupElement& w, int root_id);
bool sends_negative(const RootSystem& rs, const GroupElement& w, int root_id);

int length(const RootSystem& rs, const GroupElement& w);

// True iff l(w s_i) = l(w) - 1, i.e. w(alpha_i) < 0.
bool right_descent(const GroupElement& w, int i);

// Canonical reduced word: repeatedly strip the smallest right descent.
Word reduced_word(const RootSystem& rs, const GroupElement& w);
GroupElement from_word(const RootSystem& rs, const std::vector<int>& letters);

RankMatrix rank_matrix(const GroupElement& w);

// Bruhat order via entrywise comparison of rank matrices.
bool bruhat_leq(const GroupElement& v, const GroupElement& w);
// Independent oracle: greedy right-to-left subword scan over one fixed
// reduced word of w (the lifting property makes the greedy scan complete).
bool bruhat_leq_subword(const RootSystem& rs, const GroupElement& v, const GroupElement& w);

// Full group / involutions, in the <-lexicographic enumeration order.
std::vector<GroupElement> enumerate_group(const RootSystem& rs);
std::vector<GroupElement> enumerate_involutions(const RootSystem& rs);

// Support of an involution (Definition of section 2.2): orthogonal set of
// positive-root ids whose reflections multiply to sigma in any order.
std::vector<int> support(const RootSystem& rs, const GroupElement& sigma);

// w = u * v with v in the parabolic subgroup <s_i : i in J> and u the
// minimal-length coset representative; lengths add.
std::pair<GroupElement, GroupElement> parabolic_decompose(const RootSystem& rs,
                                                          const GroupElement& w,
                                                          const std::set<int>& J);

std::string perm_string(const GroupElement& w);
GroupElement parse_perm(const RootSystem& rs, const std::string& text);

}  // namespace kk
