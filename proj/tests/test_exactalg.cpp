#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kk/json_io.hpp"
#include "kk/poly.hpp"
#include "kk/ratfun.hpp"

using namespace kk;

namespace {

Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

Polynomial random_poly(std::mt19937& rng, int nvars, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-5, 5);
    Polynomial p(nvars);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Mono m(nvars, 0);
        for (int i = 0; i < nvars; ++i) m[i] = deg(rng);
        p.add_term(m, Rat(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial ring arithmetic") {
    Polynomial p = var(2, 1) * var(2, 2) * (var(2, 1) + var(2, 2));
    Polynomial expect(2);
    expect.add_term({2, 1}, 1);
    expect.add_term({1, 2}, 1);
    CHECK(p == expect);
    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK(p.to_string() == "a1^2*a2 + a1*a2^2");

    CHECK_THROWS_AS(var(2, 1) + var(3, 1), std::invalid_argument);

    // Product of the four positive roots of C2 against a hand-expanded
    // oracle: a1 * a2 * (a1+a2) * (2a1+a2).
    RootSystem c2 = RootSystem::build(Kind::C, 2);
    Polynomial prod = c2.positive_product();
    Polynomial oracle(2);
    // (a1 a2)(a1 + a2) = a1^2 a2 + a1 a2^2; multiply by (2a1 + a2):
    // 2a1^3 a2 + 2a1^2 a2^2 + a1^2 a2^2 + a1 a2^3.
    oracle.add_term({3, 1}, 2);
    oracle.add_term({2, 2}, 3);
    oracle.add_term({1, 3}, 1);
    CHECK(prod == oracle);
    for (const auto& [m, c] : prod.terms()) {
        CHECK(denominator(c) == 1);  // integer structure constants
        (void)m;
    }
}

TEST_CASE("weyl action on polynomials") {
    RootSystem a2 = RootSystem::build(Kind::A, 2);
    GroupElement s1 = simple_reflection(a2, 1);
    CHECK(weyl_act(a2, s1, var(2, 1)) == -var(2, 1));
    CHECK(weyl_act(a2, s1, var(2, 2)) == var(2, 1) + var(2, 2));

    RootSystem c2 = RootSystem::build(Kind::C, 2);
    GroupElement w0 = parse_perm(c2, "-1,-2");
    for (int id = 0; id < c2.root_count(); ++id)
        CHECK(weyl_act(c2, w0, c2.linear_form(id)) == -c2.linear_form(id));

    std::mt19937 rng(7042);
    auto all = enumerate_group(c2);
    for (int trial = 0; trial < 25; ++trial) {
        const GroupElement& u = all[rng() % all.size()];
        const GroupElement& v = all[rng() % all.size()];
        Polynomial p = random_poly(rng, 2, 4, 3);
        Polynomial q = random_poly(rng, 2, 4, 3);
        CHECK(weyl_act(c2, u, p * q) == weyl_act(c2, u, p) * weyl_act(c2, u, q));
        CHECK(weyl_act(c2, u, p + q) == weyl_act(c2, u, p) + weyl_act(c2, u, q));
        CHECK(weyl_act(c2, compose(u, v), p) == weyl_act(c2, u, weyl_act(c2, v, p)));
        CHECK(weyl_act(c2, identity_element(c2), p) == p);
    }
}

TEST_CASE("division by linear forms") {
    Polynomial p(2);
    p.add_term({2, 1}, 1);
    p.add_term({1, 2}, 1);
    auto [q, ok] = divide_by_linear(p, var(2, 1));
    CHECK(ok);
    Polynomial expect(2);
    expect.add_term({1, 1}, 1);
    expect.add_term({0, 2}, 1);
    CHECK(q == expect);

    auto [q2, ok2] = divide_by_linear(var(2, 1) + var(2, 2), var(2, 1));
    (void)q2;
    CHECK(!ok2);

    CHECK_THROWS_AS(divide_by_linear(p, Polynomial(2)), std::invalid_argument);
    CHECK_THROWS_AS(divide_by_linear(p, var(2, 1) * var(2, 2)), std::invalid_argument);

    // Product of all positive roots of B2 divided by e1 = a1 + a2 gives the
    // product of the remaining three roots.
    RootSystem b2 = RootSystem::build(Kind::B, 2);
    int e1 = b2.classify_eps({1, 0}).id;
    Polynomial rest = Polynomial::constant(2, 1);
    for (int id = 0; id < b2.root_count(); ++id)
        if (id != e1) rest = rest * b2.linear_form(id);
    auto [q3, ok3] = divide_by_linear(b2.positive_product(), b2.linear_form(e1));
    CHECK(ok3);
    CHECK(q3 == rest);

    // Multiply-then-divide round trip on random data.
    std::mt19937 rng(50311);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial quot = random_poly(rng, 3, 5, 3);
        Polynomial lin(3);
        bool nonzero = false;
        for (int i = 0; i < 3; ++i) {
            int c = static_cast<int>(rng() % 3);
            if (c) nonzero = true;
            Mono m(3, 0);
            m[i] = 1;
            lin.add_term(m, c);
        }
        if (!nonzero || quot.is_zero()) continue;
        auto [back, okq] = divide_by_linear(quot * lin, lin);
        CHECK(okq);
        CHECK(back == quot);
    }
}

TEST_CASE("rational functions with root denominators") {
    RootSystem a2 = RootSystem::build(Kind::A, 2);
    int a1 = a2.simple_root_id(1), al2 = a2.simple_root_id(2);
    int a12 = a2.classify_eps({1, 0, -1}).id;
    RationalFunction one = RationalFunction::constant(a2, 1);

    // 1/(a1 a2 a1) + 1/(-a1 (a1+a2) a1) = 1/(a1 a2 (a1+a2)).
    RationalFunction lhs = one.div_by_signed_root({a1, 1})
                               .div_by_signed_root({al2, 1})
                               .div_by_signed_root({a1, 1});
    RationalFunction rhs = one.div_by_signed_root({a1, -1})
                               .div_by_signed_root({a12, 1})
                               .div_by_signed_root({a1, 1});
    RationalFunction sum = lhs + rhs;
    RationalFunction expect = one.div_by_signed_root({a1, 1})
                                  .div_by_signed_root({al2, 1})
                                  .div_by_signed_root({a12, 1});
    CHECK(sum == expect);

    RationalFunction zero(a2);
    CHECK(sum + zero == sum);
    CHECK(sum * RationalFunction::constant(a2, 1) == sum);

    // (1/a1) * a1^2 = a1 with empty denominator.
    RationalFunction f = one.div_by_signed_root({a1, 1}).mul_poly(var(2, 1) * var(2, 1));
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == var(2, 1));

    // Normalization invariants: denominators sorted, no dividing root left.
    for (const RationalFunction* g : {&sum, &f, &lhs, &rhs}) {
        CHECK(std::is_sorted(g->denominator().begin(), g->denominator().end()));
        for (int id : g->denominator())
            CHECK(!divide_by_linear(g->numerator(), a2.linear_form(id)).second);
        RationalFunction renorm = *g;
        renorm.normalize();
        CHECK(renorm == *g);
    }
}

TEST_CASE("weyl action on rational functions keeps root denominators") {
    RootSystem c2 = RootSystem::build(Kind::C, 2);
    RationalFunction one = RationalFunction::constant(c2, 1);
    RationalFunction f =
        one.div_by_signed_root({0, 1}).div_by_signed_root({1, 1}).mul_poly(
            c2.linear_form(3) + Polynomial::constant(2, 1));
    for (const auto& w : enumerate_group(c2)) {
        RationalFunction g = weyl_act(c2, w, f);
        for (int id : g.denominator()) {
            CHECK(id >= 0);
            CHECK(id < c2.root_count());
        }
        CHECK(weyl_act(c2, inverse(w), g) == f);
    }
}

TEST_CASE("canonical text and json forms") {
    Polynomial p(3);
    p.add_term({2, 1, 0}, 1);
    p.add_term({1, 2, 0}, Rat(-1, 2));
    p.add_term({0, 0, 0}, 3);
    CHECK(p.to_string() == "a1^2*a2 - 1/2*a1*a2^2 + 3");
    CHECK(Polynomial(2).to_string() == "0");

    auto j = poly_to_json(p);
    CHECK(j["vars"].size() == 3);
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][1]["c"] == "-1/2");
    CHECK(j["terms"][1]["e"] == nlohmann::ordered_json::array({1, 2, 0}));

    RootSystem a2 = RootSystem::build(Kind::A, 2);
    RationalFunction f = RationalFunction::constant(a2, 1)
                             .div_by_signed_root({0, 1})
                             .div_by_signed_root({2, 1});
    auto jf = ratfun_to_json(f);
    CHECK(jf["den"] == nlohmann::ordered_json::array({1, 3}));
}
