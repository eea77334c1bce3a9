#include "kk/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace kk {

namespace {

void check_same_ambient(const GroupElement& a, const GroupElement& b) {
    if (a.kind != b.kind || a.rank != b.rank)
        throw std::invalid_argument("elements live in different ambient systems");
}

void check_ambient(const RootSystem& rs, const GroupElement& w) {
    if (rs.kind() != w.kind || rs.rank() != w.rank)
        throw std::invalid_argument("element does not belong to this root system");
}

// Position of signed index k in the order 1..n,-n..-1 (1-based).
int pos_of(int k, int n) { return k > 0 ? k : 2 * n + 1 + k; }

}  // namespace

std::string RankMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= size; ++j) {
            if (j > 1) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

bool leq_entrywise(const RankMatrix& x, const RankMatrix& y) {
    if (x.size != y.size) throw std::invalid_argument("rank matrix size mismatch");
    for (std::size_t k = 0; k < x.entries.size(); ++k)
        if (x.entries[k] > y.entries[k]) return false;
    return true;
}

RankMatrix strictly_lower(const RankMatrix& r) {
    RankMatrix s = r;
    for (int i = 1; i <= r.size; ++i)
        for (int j = i; j <= r.size; ++j) s.at(i, j) = 0;
    return s;
}

GroupElement identity_element(const RootSystem& rs) {
    GroupElement w{rs.kind(), rs.rank(), std::vector<int>(rs.carrier())};
    for (int i = 1; i <= rs.carrier(); ++i) w.img[i - 1] = i;
    return w;
}

GroupElement simple_reflection(const RootSystem& rs, int i) {
    return from_reflection(rs, rs.simple_root_id(i));
}

GroupElement from_reflection(const RootSystem& rs, int root_id) {
    GroupElement w = identity_element(rs);
    const auto& e = rs.root(root_id).eps;
    int i = 0, j = 0;
    for (int k = 0; k < static_cast<int>(e.size()); ++k)
        if (e[k] != 0) (i == 0 ? i : j) = k + 1;
    if (j == 0) {  // e_i or 2e_i -> (i,-i)
        w.img[i - 1] = -i;
    } else if (e[j - 1] > 0) {  // e_i+e_j -> (i,-j)(-i,j)
        w.img[i - 1] = -j;
        w.img[j - 1] = -i;
    } else {  // e_i-e_j -> (i,j)(-i,-j)
        w.img[i - 1] = j;
        w.img[j - 1] = i;
    }
    return w;
}

GroupElement compose(const GroupElement& u, const GroupElement& v) {
    check_same_ambient(u, v);
    GroupElement w{u.kind, u.rank, std::vector<int>(u.carrier())};
    for (int i = 1; i <= u.carrier(); ++i) w.img[i - 1] = u(v(i));
    return w;
}

GroupElement inverse(const GroupElement& u) {
    GroupElement w{u.kind, u.rank, std::vector<int>(u.carrier())};
    for (int i = 1; i <= u.carrier(); ++i) {
        int v = u.img[i - 1];
        if (v > 0)
            w.img[v - 1] = i;
        else
            w.img[-v - 1] = -i;
    }
    return w;
}

SignedRoot act_on_root(const RootSystem& rs, const GroupElement& w, int root_id) {
    check_ambient(rs, w);
    const auto& e = rs.root(root_id).eps;
    std::vector<int> out(e.size(), 0);
    for (int i = 1; i <= static_cast<int>(e.size()); ++i) {
        if (e[i - 1] == 0) continue;
        int t = w(i);
        out[std::abs(t) - 1] += (t > 0 ? e[i - 1] : -e[i - 1]);
    }
    return rs.classify_eps(out);
}

bool sends_negative(const RootSystem& rs, const GroupElement& w, int root_id) {
    return act_on_root(rs, w, root_id).sign < 0;
}

int length(const RootSystem& rs, const GroupElement& w) {
    int l = 0;
    for (int id = 0; id < rs.root_count(); ++id)
        if (sends_negative(rs, w, id)) ++l;
    return l;
}

bool right_descent(const GroupElement& w, int i) {
    const int n = w.carrier();
    if (w.kind == Kind::A) return w.img[i - 1] > w.img[i];
    if (i < w.rank) return prec_key(w.img[i - 1], n) > prec_key(w.img[i], n);
    return w.img[w.rank - 1] < 0;
}

Word reduced_word(const RootSystem& rs, const GroupElement& w) {
    check_ambient(rs, w);
    GroupElement x = w;
    std::vector<int> peeled;
    while (!x.is_identity()) {
        int i = 0;
        for (int k = 1; k <= rs.rank(); ++k)
            if (right_descent(x, k)) {
                i = k;
                break;
            }
        x = compose(x, simple_reflection(rs, i));
        peeled.push_back(i);
    }
    std::reverse(peeled.begin(), peeled.end());
    return Word{std::move(peeled), true};
}

GroupElement from_word(const RootSystem& rs, const std::vector<int>& letters) {
    GroupElement w = identity_element(rs);
    for (int i : letters) {
        if (i < 1 || i > rs.rank()) throw std::invalid_argument("word letter out of range");
        w = compose(w, simple_reflection(rs, i));
    }
    return w;
}

RankMatrix rank_matrix(const GroupElement& w) {
    const bool typeA = (w.kind == Kind::A);
    const int n = w.carrier();
    const int size = typeA ? n : 2 * n;
    // 0-1 rook placement: entry (pos(w(j)), pos(j)) for all signed j.
    std::vector<int> x(static_cast<std::size_t>(size) * size, 0);
    auto put = [&](int r, int c) { x[(r - 1) * static_cast<std::size_t>(size) + c - 1] = 1; };
    for (int j = 1; j <= n; ++j) {
        if (typeA) {
            put(w.img[j - 1], j);
        } else {
            put(pos_of(w(j), n), pos_of(j, n));
            put(pos_of(w(-j), n), pos_of(-j, n));
        }
    }
    // SW counts: entry (i,j) = number of rooks with row >= i, col <= j.
    RankMatrix r;
    r.size = size;
    r.entries.assign(x.size(), 0);
    for (int i = size; i >= 1; --i) {
        int rowsum = 0;
        for (int j = 1; j <= size; ++j) {
            rowsum += x[(i - 1) * static_cast<std::size_t>(size) + j - 1];
            r.at(i, j) = rowsum + (i < size ? r.at(i + 1, j) : 0);
        }
    }
    return r;
}

bool bruhat_leq(const GroupElement& v, const GroupElement& w) {
    check_same_ambient(v, w);
    return leq_entrywise(rank_matrix(v), rank_matrix(w));
}

bool bruhat_leq_subword(const RootSystem& rs, const GroupElement& v, const GroupElement& w) {
    check_same_ambient(v, w);
    Word word = reduced_word(rs, w);
    GroupElement u = v;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (right_descent(u, *it)) u = compose(u, simple_reflection(rs, *it));
    }
    return u.is_identity();
}

std::vector<GroupElement> enumerate_group(const RootSystem& rs) {
    const int n = rs.carrier();
    std::vector<GroupElement> out;
    // Candidate values for each slot, in the order 1 < 2 < ... < n < -n < ... < -1.
    std::vector<int> values;
    for (int k = 1; k <= n; ++k) values.push_back(k);
    if (rs.kind() != Kind::A)
        for (int k = n; k >= 1; --k) values.push_back(-k);
    std::vector<bool> used(n + 1, false);
    GroupElement w{rs.kind(), rs.rank(), std::vector<int>(n)};
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            out.push_back(w);
            return;
        }
        for (int v : values) {
            if (used[std::abs(v)]) continue;
            used[std::abs(v)] = true;
            w.img[depth] = v;
            self(self, depth + 1);
            used[std::abs(v)] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<GroupElement> enumerate_involutions(const RootSystem& rs) {
    std::vector<GroupElement> out;
    for (auto& w : enumerate_group(rs))
        if (w.is_involution()) out.push_back(std::move(w));
    return out;
}

std::vector<int> support(const RootSystem& rs, const GroupElement& sigma) {
    check_ambient(rs, sigma);
    if (!sigma.is_involution()) throw std::invalid_argument("support requires an involution");
    const int n = rs.carrier();
    std::vector<int> ids;
    for (int i = 1; i <= n; ++i) {
        int v = sigma.img[i - 1];
        std::vector<int> eps(n, 0);
        if (v > i) {  // e_i - e_j
            eps[i - 1] = 1;
            eps[v - 1] = -1;
        } else if (v < 0 && -v > i) {  // e_i + e_j
            eps[i - 1] = 1;
            eps[-v - 1] = 1;
        } else if (v == -i) {  // e_i (B) or 2e_i (C)
            eps[i - 1] = (rs.kind() == Kind::C) ? 2 : 1;
        } else {
            continue;
        }
        ids.push_back(rs.classify_eps(eps).id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::pair<GroupElement, GroupElement> parabolic_decompose(const RootSystem& rs,
                                                          const GroupElement& w,
                                                          const std::set<int>& J) {
    check_ambient(rs, w);
    for (int i : J)
        if (i < 1 || i > rs.rank()) throw std::invalid_argument("parabolic index out of range");
    GroupElement u = w;
    GroupElement v = identity_element(rs);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i : J) {
            if (right_descent(u, i)) {
                u = compose(u, simple_reflection(rs, i));
                v = compose(simple_reflection(rs, i), v);
                progressed = true;
                break;
            }
        }
    }
    return {u, v};
}

std::string perm_string(const GroupElement& w) {
    std::ostringstream os;
    for (int i = 0; i < w.carrier(); ++i) {
        if (i) os << ',';
        os << w.img[i];
    }
    return os.str();
}

GroupElement parse_perm(const RootSystem& rs, const std::string& text) {
    std::vector<int> img;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("permutation entry '" + item + "' is not an integer");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("permutation entry '" + item + "' is not an integer");
        img.push_back(v);
    }
    const int n = rs.carrier();
    if (static_cast<int>(img.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " images, got " +
                                    std::to_string(img.size()));
    std::vector<bool> seen(n + 1, false);
    for (int v : img) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a])
            throw std::invalid_argument("images must form a signed permutation of 1.." +
                                        std::to_string(n));
        if (v < 0 && rs.kind() == Kind::A)
            throw std::invalid_argument("type A permutations have positive images only");
        seen[a] = true;
    }
    return GroupElement{rs.kind(), rs.rank(), std::move(img)};
}

}  // namespace kk
