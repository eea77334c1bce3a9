#include "kk/embedding.hpp"

#include <stdexcept>

namespace kk {

Embedding make_embedding(Kind kind, int source_rank, int k1, int k2) {
    if (kind == Kind::B) throw std::invalid_argument("embeddings are built for types A and C");
    Embedding e{kind, source_rank, k1, k2};
    if (!(1 <= k1 && k1 < k2 && k2 <= e.target_carrier()))
        throw std::invalid_argument("need 1 <= k1 < k2 <= carrier of the target group");
    return e;
}

GroupElement embed(const RootSystem& target, const Embedding& e, const GroupElement& w) {
    if (target.kind() != e.kind || target.rank() != e.target_rank())
        throw std::invalid_argument("target system does not match the embedding");
    if (w.kind != e.kind || w.rank != e.source_rank)
        throw std::invalid_argument("element does not belong to the embedding source");
    GroupElement out = identity_element(target);
    for (int i = 1; i <= e.source_carrier(); ++i) {
        int v = w.img[i - 1];
        int mapped = e.map_index(std::abs(v));
        out.img[e.map_index(i) - 1] = v > 0 ? mapped : -mapped;
    }
    return out;
}

namespace {

GroupElement cross_reflection(const RootSystem& target, const Embedding& e, CrossSign sign) {
    std::vector<int> eps(target.carrier(), 0);
    eps[e.k1 - 1] = 1;
    eps[e.k2 - 1] = (sign == CrossSign::minus) ? -1 : 1;
    return from_reflection(target, target.classify_eps(eps).id);
}

long count_in(const GroupElement& wt, const std::vector<int>& dom,
              const std::vector<int>& range, bool negatives) {
    // |w(dom) ∩ range| or |w(dom) ∩ range^-|, with range given in positive letters.
    long c = 0;
    for (int a : dom) {
        int v = wt(a);
        if (negatives ? v >= 0 : v <= 0) continue;
        int m = std::abs(v);
        for (int r : range)
            if (r == m) {
                ++c;
                break;
            }
    }
    return c;
}

}  // namespace

LengthLemmaResult length_lemma_A(const RootSystem& source, const RootSystem& target,
                                 const Embedding& e, const GroupElement& w) {
    if (!w.is_involution()) throw std::invalid_argument("length lemma requires an involution");
    GroupElement wt = embed(target, e, w);
    GroupElement wp = compose(wt, cross_reflection(target, e, CrossSign::minus));
    long direct = length(target, wp);
    long lw = length(source, w);
    long cAC = count_in(wt, e.set_A(), e.set_C(), false);
    LengthLemmaResult r;
    r.direct = direct;
    r.printed = 2 * (e.k2 - e.k1) + 4 * cAC + lw + 1;
    r.corrected = 2 * (e.k2 - e.k1 - 1) + 4 * cAC + lw + 1;
    return r;
}

LengthLemmaResult length_lemma_C(const RootSystem& source, const RootSystem& target,
                                 const Embedding& e, const GroupElement& w, CrossSign sign) {
    if (!w.is_involution()) throw std::invalid_argument("length lemma requires an involution");
    GroupElement wt = embed(target, e, w);
    GroupElement wp = compose(wt, cross_reflection(target, e, sign));
    long direct = length(target, wp);
    long lw = length(source, w);
    const auto A = e.set_A(), B = e.set_B(), C = e.set_C();
    long cABm = count_in(wt, A, B, true);   // |w(A) ∩ B^-|
    long cAAm = count_in(wt, A, A, true);   // |w(A) ∩ A^-|
    LengthLemmaResult r;
    r.direct = direct;
    if (sign == CrossSign::minus) {
        long cACpm = count_in(wt, A, C, false) + count_in(wt, A, C, true);  // |w(A) ∩ C^±|
        r.printed = 2 * (e.k2 - e.k1) + 4 * cACpm + 4 * cABm + 4 * cAAm + lw + 1;
        r.corrected = 2 * (e.k2 - e.k1 - 1) + 4 * cACpm + 4 * cABm + 4 * cAAm + lw + 1;
    } else {
        r.printed = 2 + 2 * (e.k2 - e.k1) + 4 * static_cast<long>(C.size()) + 4 * cABm +
                    4 * cAAm + lw + 1;
        r.corrected = 2 + 2 * (e.k2 - e.k1 - 1) + 4 * static_cast<long>(C.size()) + 4 * cABm +
                      4 * cAAm + lw + 1;
    }
    return r;
}

}  // namespace kk
