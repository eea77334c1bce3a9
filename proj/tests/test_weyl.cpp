#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kk/weyl.hpp"

using namespace kk;

namespace {

GroupElement refl(const RootSystem& rs, std::vector<int> eps) {
    return from_reflection(rs, rs.classify_eps(eps).id);
}

// Independent length oracle: count positive roots sent negative, acting on
// eps vectors by hand (no library act_on_root).
int length_oracle(const RootSystem& rs, const GroupElement& w) {
    int count = 0;
    for (int id = 0; id < rs.root_count(); ++id) {
        const auto& e = rs.root(id).eps;
        std::vector<int> out(e.size(), 0);
        for (int i = 1; i <= static_cast<int>(e.size()); ++i) {
            if (e[i - 1] == 0) continue;
            int t = w(i);
            out[std::abs(t) - 1] += (t > 0 ? e[i - 1] : -e[i - 1]);
        }
        int first = 0;
        for (int x : out)
            if (x != 0) {
                first = x;
                break;
            }
        if (first < 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("from_reflection reproduces the hyperoctahedral factors") {
    RootSystem c5 = RootSystem::build(Kind::C, 5);
    CHECK(refl(c5, {1, 0, 0, 0, 1}).img == std::vector<int>{-5, 2, 3, 4, -1});
    RootSystem c3 = RootSystem::build(Kind::C, 3);
    CHECK(refl(c3, {0, 2, 0}).img == std::vector<int>{1, -2, 3});
    RootSystem a3 = RootSystem::build(Kind::A, 3);
    CHECK(simple_reflection(a3, 1).img == std::vector<int>{2, 1, 3, 4});
}

TEST_CASE("composition and the two-line product of reflections") {
    RootSystem c5 = RootSystem::build(Kind::C, 5);
    GroupElement p = compose(refl(c5, {1, 0, 0, 0, 1}),
                             compose(refl(c5, {0, 0, 2, 0, 0}), refl(c5, {0, 1, 0, -1, 0})));
    CHECK(p.img == std::vector<int>{-5, 4, -3, 2, -1});

    RootSystem c2 = RootSystem::build(Kind::C, 2);
    for (const auto& w : enumerate_group(c2)) {
        CHECK(compose(w, inverse(w)).is_identity());
        CHECK(compose(inverse(w), w).is_identity());
        if (w.is_involution()) CHECK(inverse(w) == w);
    }
    RootSystem a2 = RootSystem::build(Kind::A, 2);
    GroupElement s1 = simple_reflection(a2, 1);
    CHECK_THROWS_AS(compose(s1, simple_reflection(c2, 1)), std::invalid_argument);
}

TEST_CASE("action on roots") {
    RootSystem c2 = RootSystem::build(Kind::C, 2);
    GroupElement w = parse_perm(c2, "-1,2");
    SignedRoot sr = act_on_root(c2, w, c2.classify_eps({1, -1}).id);
    CHECK(sr.sign == -1);
    CHECK(c2.root(sr.id).eps == std::vector<int>{1, 1});

    GroupElement id = identity_element(c2);
    for (int r = 0; r < c2.root_count(); ++r) {
        SignedRoot s = act_on_root(c2, id, r);
        CHECK(s.sign == 1);
        CHECK(s.id == r);
    }

    // Longest element of C2 is -id; it negates every root.
    GroupElement w0 = identity_element(c2);
    for (const auto& g : enumerate_group(c2))
        if (length(c2, g) > length(c2, w0)) w0 = g;
    CHECK(w0.img == std::vector<int>{-1, -2});
    CHECK(length(c2, w0) == 4);
    CHECK(act_on_root(c2, w0, c2.classify_eps({2, 0}).id).sign == -1);

    // Consistency with reflect for w = s_alpha.
    RootSystem b3 = RootSystem::build(Kind::B, 3);
    for (int a = 0; a < b3.root_count(); ++a) {
        GroupElement sa = from_reflection(b3, a);
        for (int b = 0; b < b3.root_count(); ++b) {
            SignedRoot via_w = act_on_root(b3, sa, b);
            SignedRoot via_r = b3.reflect(a, b);
            CHECK(via_w.id == via_r.id);
            CHECK(via_w.sign == via_r.sign);
        }
    }
}

TEST_CASE("length agrees with the inversion-count oracle") {
    RootSystem c2 = RootSystem::build(Kind::C, 2);
    CHECK(length(c2, identity_element(c2)) == 0);
    CHECK(length(c2, refl(c2, {2, 0})) == 3);
    for (Kind k : {Kind::A, Kind::B, Kind::C}) {
        RootSystem rs = RootSystem::build(k, k == Kind::A ? 3 : 3);
        for (const auto& w : enumerate_group(rs)) {
            CHECK(length(rs, w) == length_oracle(rs, w));
            CHECK(length(rs, w) == length(rs, inverse(w)));
        }
    }
    for (int i = 1; i <= 2; ++i) CHECK(length(c2, simple_reflection(c2, i)) == 1);
}

TEST_CASE("reduced words") {
    RootSystem a2 = RootSystem::build(Kind::A, 2);
    GroupElement w = from_word(a2, {1, 2, 1});
    Word rw = reduced_word(a2, w);
    CHECK(rw.letters.size() == 3);
    CHECK(from_word(a2, rw.letters) == w);

    CHECK(reduced_word(a2, identity_element(a2)).letters.empty());

    RootSystem c2 = RootSystem::build(Kind::C, 2);
    GroupElement w0 = from_word(c2, {2, 1, 2, 1});
    CHECK(w0.img == std::vector<int>{-1, -2});
    CHECK(reduced_word(c2, w0).letters.size() == 4);
    // No shorter word reaches w0.
    for (int len = 0; len <= 3; ++len) {
        for (int mask = 0; mask < (1 << (2 * len)); ++mask) {
            std::vector<int> letters;
            int m = mask;
            for (int t = 0; t < len; ++t) {
                letters.push_back(1 + (m & 1));
                m >>= 1;
            }
            CHECK(from_word(c2, letters) != w0);
        }
    }

    for (const auto& g : enumerate_group(c2)) {
        Word word = reduced_word(c2, g);
        CHECK(static_cast<int>(word.letters.size()) == length(c2, g));
        CHECK(from_word(c2, word.letters) == g);
    }
    CHECK_THROWS_AS(from_word(c2, std::vector<int>{3}), std::invalid_argument);
}

TEST_CASE("rank matrix golden values") {
    RootSystem c4 = RootSystem::build(Kind::C, 4);
    GroupElement w = parse_perm(c4, "-3,-2,4,-1");
    RankMatrix r = rank_matrix(w);
    const int expected[8][8] = {
        {1, 2, 3, 4, 5, 6, 7, 8},
        {1, 2, 3, 4, 4, 5, 6, 7},
        {1, 2, 3, 4, 4, 5, 5, 6},
        {1, 2, 3, 4, 4, 5, 5, 5},
        {1, 2, 2, 3, 3, 4, 4, 4},
        {1, 2, 2, 3, 3, 3, 3, 3},
        {0, 1, 1, 2, 2, 2, 2, 2},
        {0, 0, 0, 1, 1, 1, 1, 1},
    };
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) CHECK(r.at(i, j) == expected[i - 1][j - 1]);
    // Spot entries in (row index, column index) labels: (-1,1), (4,8), (-4,4).
    CHECK(r.at(8, 1) == 0);
    CHECK(r.at(4, 8) == 5);
    CHECK(r.at(5, 4) == 3);

    RankMatrix rid = rank_matrix(identity_element(c4));
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) CHECK(rid.at(i, j) == std::max(0, j - i + 1));
    for (const auto& g : enumerate_group(RootSystem::build(Kind::C, 2)))
        for (int j = 1; j <= 4; ++j) CHECK(rank_matrix(g).at(1, j) == j);
}

TEST_CASE("Bruhat order: chain and column patterns") {
    RootSystem c3 = RootSystem::build(Kind::C, 3);
    auto lt = [&](const GroupElement& x, const GroupElement& y) {
        return x != y && bruhat_leq(x, y);
    };
    GroupElement s12 = refl(c3, {1, -1, 0}), s13 = refl(c3, {1, 0, -1});
    GroupElement p13 = refl(c3, {1, 0, 1}), p12 = refl(c3, {1, 1, 0});
    CHECK(lt(s12, s13));
    CHECK(lt(s13, p13));
    CHECK(lt(p13, p12));

    // s_{e_i-e_j} < s_{2e_k} for k <= i; s_{e_i+e_j} incomparable with
    // s_{2e_i}.
    GroupElement d1 = refl(c3, {2, 0, 0}), d2 = refl(c3, {0, 2, 0});
    GroupElement s23 = refl(c3, {0, 1, -1}), p23 = refl(c3, {0, 1, 1});
    CHECK(lt(s12, d1));
    CHECK(lt(s23, d1));
    CHECK(lt(s23, d2));
    CHECK(!bruhat_leq(p12, d1));
    CHECK(!bruhat_leq(d1, p12));
    CHECK(!bruhat_leq(p23, d2));
    CHECK(!bruhat_leq(d2, p23));

    // alpha in the first column, beta outside: never below.
    for (int a : c3.column_set(1))
        for (int id = 0; id < c3.root_count(); ++id)
            if (c3.row_col(id).second != 1)
                CHECK(!bruhat_leq(from_reflection(c3, a), from_reflection(c3, id)));

    for (const auto& w : enumerate_group(c3)) {
        CHECK(bruhat_leq(identity_element(c3), w));
        CHECK(bruhat_leq(w, w));
    }
}

TEST_CASE("subword oracle agrees with the rank-matrix order") {
    for (Kind k : {Kind::A, Kind::B, Kind::C}) {
        RootSystem rs = RootSystem::build(k, k == Kind::A ? 2 : 2);
        auto all = enumerate_group(rs);
        for (const auto& v : all)
            for (const auto& w : all)
                CHECK(bruhat_leq(v, w) == bruhat_leq_subword(rs, v, w));
    }
}

TEST_CASE("enumeration sizes and order") {
    RootSystem a2 = RootSystem::build(Kind::A, 2);
    CHECK(enumerate_group(a2).size() == 6);
    CHECK(enumerate_involutions(a2).size() == 4);
    RootSystem c2 = RootSystem::build(Kind::C, 2);
    auto all = enumerate_group(c2);
    CHECK(all.size() == 8);
    CHECK(all.front().is_identity());
    CHECK(std::is_sorted(all.begin(), all.end(), PrecLess{}));
    CHECK(enumerate_involutions(c2).size() == 6);

    // Involution counts for B/C at ranks 2..4 against the recurrence
    // i(n) = 2 i(n-1) + 2(n-1) i(n-2).
    std::vector<std::size_t> counts{1, 2};
    for (int n = 2; n <= 4; ++n)
        counts.push_back(2 * counts[n - 1] + 2 * (n - 1) * counts[n - 2]);
    for (int n = 2; n <= 4; ++n) {
        CHECK(enumerate_involutions(RootSystem::build(Kind::B, n)).size() == counts[n]);
        CHECK(enumerate_involutions(RootSystem::build(Kind::C, n)).size() == counts[n]);
    }
    CHECK(counts[2] == 6);
    CHECK(counts[3] == 20);
    CHECK(counts[4] == 76);
}

TEST_CASE("support of involutions") {
    RootSystem c6 = RootSystem::build(Kind::C, 6);
    GroupElement sigma = parse_perm(c6, "-6,-2,5,4,3,-1");
    std::vector<std::string> names;
    for (int id : support(c6, sigma)) names.push_back(c6.eps_string(id));
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"2e2", "e1+e6", "e3-e5"});

    CHECK(support(c6, identity_element(c6)).empty());
    RootSystem c3 = RootSystem::build(Kind::C, 3);
    GroupElement t = refl(c3, {1, -1, 0});
    auto supp = support(c3, t);
    CHECK(supp.size() == 1);
    CHECK(c3.eps_string(supp[0]) == "e1-e2");
    CHECK_THROWS_AS(support(c3, from_word(c3, {1, 2})), std::invalid_argument);

    // Orthogonality, one support root per column, and the product property
    // in a few shuffled orders.
    std::mt19937 rng(20240817);
    for (Kind k : {Kind::B, Kind::C}) {
        RootSystem rs = RootSystem::build(k, 3);
        for (const auto& s : enumerate_involutions(rs)) {
            auto ids = support(rs, s);
            for (int c = 1; c <= 3; ++c) {
                int in_col = 0;
                for (int id : ids)
                    if (rs.row_col(id).second == c) ++in_col;
                CHECK(in_col <= 1);
            }
            for (std::size_t x = 0; x < ids.size(); ++x)
                for (std::size_t y = x + 1; y < ids.size(); ++y) {
                    long dot = 0;
                    const auto &ex = rs.root(ids[x]).eps, &ey = rs.root(ids[y]).eps;
                    for (std::size_t t2 = 0; t2 < ex.size(); ++t2)
                        dot += static_cast<long>(ex[t2]) * ey[t2];
                    CHECK(dot == 0);
                }
            for (int trial = 0; trial < 3; ++trial) {
                auto order = ids;
                std::shuffle(order.begin(), order.end(), rng);
                GroupElement prod = identity_element(rs);
                for (int id : order) prod = compose(prod, from_reflection(rs, id));
                CHECK(prod == s);
            }
        }
    }
}

TEST_CASE("parabolic decomposition") {
    RootSystem c3 = RootSystem::build(Kind::C, 3);
    std::set<int> J{2, 3};

    // Support meets column 1 in e1-e3 (w(1) = 3): u = s_2 s_1.
    GroupElement w = refl(c3, {1, 0, -1});
    auto [u, v] = parabolic_decompose(c3, w, J);
    CHECK(u == from_word(c3, {2, 1}));
    CHECK(compose(u, v) == w);
    CHECK(length(c3, u) + length(c3, v) == length(c3, w));

    // w(1) = -1: u = s_1 s_2 s_3 s_2 s_1.
    GroupElement neg1 = refl(c3, {2, 0, 0});
    auto [u2, v2] = parabolic_decompose(c3, neg1, J);
    CHECK(u2 == from_word(c3, {1, 2, 3, 2, 1}));
    CHECK(v2.is_identity());

    // Elements of the parabolic subgroup decompose trivially.
    GroupElement inside = from_word(c3, {2, 3, 2});
    auto [u3, v3] = parabolic_decompose(c3, inside, J);
    CHECK(u3.is_identity());
    CHECK(v3 == inside);

    // General contract on all of W(C3) for a few J's.
    for (const std::set<int>& Js : {std::set<int>{2, 3}, std::set<int>{1}, std::set<int>{1, 3}}) {
        for (const auto& g : enumerate_group(c3)) {
            auto [uu, vv] = parabolic_decompose(c3, g, Js);
            CHECK(compose(uu, vv) == g);
            CHECK(length(c3, uu) + length(c3, vv) == length(c3, g));
            for (int i : Js)
                CHECK(!right_descent(uu, i));
            // v lies in the parabolic subgroup: letters of its reduced word.
            for (int letter : reduced_word(c3, vv).letters) CHECK(Js.count(letter) == 1);
        }
    }
}

TEST_CASE("descents track length steps") {
    for (Kind k : {Kind::A, Kind::B, Kind::C}) {
        RootSystem rs = RootSystem::build(k, k == Kind::A ? 3 : 3);
        for (const auto& w : enumerate_group(rs)) {
            int lw = length(rs, w);
            for (int i = 1; i <= rs.rank(); ++i) {
                int ls = length(rs, compose(w, simple_reflection(rs, i)));
                CHECK(std::abs(ls - lw) == 1);
                CHECK((ls == lw - 1) == right_descent(w, i));
                CHECK((ls == lw - 1) ==
                      (act_on_root(rs, w, rs.simple_root_id(i)).sign < 0));
            }
        }
    }
}

TEST_CASE("involution order via strictly lower rank matrices") {
    for (Kind k : {Kind::A, Kind::B, Kind::C}) {
        RootSystem rs = RootSystem::build(k, 3);
        auto invs = enumerate_involutions(rs);
        for (const auto& s : invs)
            for (const auto& t : invs) {
                bool full = bruhat_leq(s, t);
                bool star = leq_entrywise(strictly_lower(rank_matrix(s)),
                                          strictly_lower(rank_matrix(t)));
                CHECK(full == star);
            }
    }
}

TEST_CASE("minimal coset representative dominates g0 for column-1 support") {
    // Involutions with support meeting column 1 in e1-e_j (j > 2) or e1+e_j:
    // the parabolic parts satisfy inverse(v) >= u s_1.
    for (Kind k : {Kind::B, Kind::C}) {
        for (int n = 3; n <= 4; ++n) {
            RootSystem rs = RootSystem::build(k, n);
            std::set<int> J;
            for (int i = 2; i <= n; ++i) J.insert(i);
            GroupElement s1 = simple_reflection(rs, 1);
            for (const auto& w : enumerate_involutions(rs)) {
                std::vector<int> meet;
                for (int id : support(rs, w))
                    if (rs.row_col(id).second == 1) meet.push_back(id);
                if (meet.size() != 1) continue;
                auto [row, col] = rs.row_col(meet.front());
                (void)col;
                bool diff_case = row > 2;   // e1-e_j with j > 2
                bool sum_case = row < 0 && -row >= 2 && rs.root(meet.front()).eps[0] == 1;
                if (!diff_case && !sum_case) continue;
                auto [u, v] = parabolic_decompose(rs, w, J);
                GroupElement g0 = compose(u, s1);
                CHECK(bruhat_leq(g0, inverse(v)));
            }
        }
    }
}

TEST_CASE("permutation text io") {
    RootSystem c4 = RootSystem::build(Kind::C, 4);
    GroupElement w = parse_perm(c4, "-3,-2,4,-1");
    CHECK(perm_string(w) == "-3,-2,4,-1");
    CHECK_THROWS_AS(parse_perm(c4, "1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm(c4, "1,2,3,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm(c4, "1,2,3,x"), std::invalid_argument);
    RootSystem a2 = RootSystem::build(Kind::A, 2);
    CHECK_THROWS_AS(parse_perm(a2, "-1,2,3"), std::invalid_argument);
    CHECK(parse_perm(a2, "2,1,3").img == std::vector<int>{2, 1, 3});
}
