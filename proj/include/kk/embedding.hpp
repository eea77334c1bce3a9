#pragma once

#include "kk/root_system.hpp"
#include "kk/weyl.hpp"

namespace kk {

// Identification of a rank-r group with the subgroup of the rank-(r+2) group
// fixing the two letters k1 < k2: source letter k goes to the k-th element of
// {1..N+2} \ {k1,k2} in increasing order (N = source carrier).
struct Embedding {
    Kind kind = Kind::A;
    int source_rank = 0;
    int k1 = 0, k2 = 0;

    int target_rank() const { return source_rank + 2; }
    int source_carrier() const { return kind == Kind::A ? source_rank + 1 : source_rank; }
    int target_carrier() const { return source_carrier() + 2; }

    int map_index(int k) const {
        if (k <= k1 - 1) return k;
        if (k <= k2 - 2) return k + 1;
        return k + 2;
    }
    std::vector<int> set_A() const {  // {1..k1-1} in target letters
        std::vector<int> v;
        for (int k = 1; k < k1; ++k) v.push_back(k);
        return v;
    }
    std::vector<int> set_B() const {  // {k1+1..k2-1}
        std::vector<int> v;
        for (int k = k1 + 1; k < k2; ++k) v.push_back(k);
        return v;
    }
    std::vector<int> set_C() const {  // {k2+1..N+2}
        std::vector<int> v;
        for (int k = k2 + 1; k <= target_carrier(); ++k) v.push_back(k);
        return v;
    }
};

Embedding make_embedding(Kind kind, int source_rank, int k1, int k2);

// Image of w in the larger group; fixes k1 and k2 (and their negatives in
// type C), maps involutions to involutions.
GroupElement embed(const RootSystem& target, const Embedding& e, const GroupElement& w);

// Lengths of w' in the big group: computed directly by inversion count, and
// via the two closed forms (the one with the 2(k2-k1) constant as displayed,
// and the variant using 2|B| = 2(k2-k1-1) that the derivations' own set
// counts produce). The direct count is ground truth.
struct LengthLemmaResult {
    long direct = 0;
    long printed = 0;
    long corrected = 0;
};

// w' = embed(w) * s_{eta_{k1} - eta_{k2}} for an involution w of type A.
LengthLemmaResult length_lemma_A(const RootSystem& source, const RootSystem& target,
                                 const Embedding& e, const GroupElement& w);

enum class CrossSign { minus, plus };

// w' = embed(w) * s_{eta_{k1} -+ eta_{k2}} for an involution w of type C.
LengthLemmaResult length_lemma_C(const RootSystem& source, const RootSystem& target,
                                 const Embedding& e, const GroupElement& w, CrossSign sign);

}  // namespace kk
