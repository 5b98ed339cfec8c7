#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggms/dualfn.hpp"

#include <random>

using namespace ggms;

// hand-built value vectors on the A2 weight (-1,-1): words are {12, 21}
static Functional phi_m12(const Algebra&) {
    return Functional{Weight({-1, -1}), {Rat(0), Rat(1)}};
}
static Functional phi_m21(const Algebra&) {
    return Functional{Weight({-1, -1}), {Rat(1), Rat(0)}};
}

static Functional random_o_element(const Algebra& alg, const Weight& lambda,
                                   std::mt19937& rng) {
    const auto& basis = alg.o_basis(lambda);
    Functional f = functional_zero(alg, lambda);
    for (const auto& b : basis) {
        Rat c(int(rng() % 7) - 3);
        for (size_t k = 0; k < b.size(); ++k) f.values[k] += c * b[k];
    }
    return f;
}

TEST_CASE("zeta basics") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0), z2 = zeta(alg, 1);
    CHECK(evaluate(alg, z1, word_parse("1", 2)) == Rat(1));
    CHECK(evaluate(alg, z2, word_parse("2", 2)) == Rat(1));
    // <e_1, zeta_2> = 0 by weight
    WordVector e1;
    e1.weight = Weight({1, 0});
    e1.add(word_parse("1", 2), Rat(1));
    CHECK(pair_with(alg, e1, z2) == Rat(0));
}

TEST_CASE("shuffle product values") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0), z2 = zeta(alg, 1);
    Functional sq = multiply(alg, z1, z1);
    CHECK(evaluate(alg, sq, word_parse("11", 2)) == Rat(2));
    for (int n = 1; n <= 5; ++n) {
        Functional p = power(alg, z1, n);
        Word w(n, 0);
        Rat fact(1);
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(evaluate(alg, p, w) == fact);
    }
    Functional z12 = multiply(alg, z1, z2);
    CHECK(evaluate(alg, z12, word_parse("12", 2)) == Rat(1));
    CHECK(evaluate(alg, z12, word_parse("21", 2)) == Rat(1));
}

TEST_CASE("multiply is commutative and associative") {
    Algebra alg(CartanData::from_label("A2"));
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        Functional f = random_o_element(alg, Weight({-1, 0}), rng);
        Functional g = random_o_element(alg, Weight({-1, -1}), rng);
        Functional h = random_o_element(alg, Weight({0, -1}), rng);
        CHECK(multiply(alg, f, g) == multiply(alg, g, f));
        CHECK(multiply(alg, multiply(alg, f, g), h) ==
              multiply(alg, f, multiply(alg, g, h)));
    }
}

TEST_CASE("products vanish on the Serre ideal") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0), z2 = zeta(alg, 1);
    Functional f = multiply(alg, multiply(alg, z1, z1), z2);
    CHECK(check_in_o(alg, f));
    CHECK(check_in_o(alg, multiply(alg, f, z2)));
}

TEST_CASE("coproduct components of zeta_i^2") {
    Algebra alg(CartanData::from_label("A2"));
    Functional sq = power(alg, zeta(alg, 0), 2);
    CoproductComponent comp = coproduct_component(alg, sq, Weight({-1, 0}));
    REQUIRE(comp.rank == 1);
    // the component is 2 zeta_1 (x) zeta_1 (as a product of the factors)
    const auto& [b, c] = comp.pairs[0];
    CHECK(b.values[0] * c.values[0] == Rat(2));
}

TEST_CASE("counit components are exactly (1,f) and (f,1)") {
    Algebra alg(CartanData::from_label("A2"));
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        Functional f = random_o_element(alg, Weight({-2, -1}), rng);
        if (f.is_zero()) continue;
        CoproductComponent at0 = coproduct_component(alg, f, Weight({0, 0}));
        REQUIRE(at0.rank == 1);
        CHECK(at0.pairs[0].first == functional_one(alg));
        CHECK(at0.pairs[0].second == f);
        CoproductComponent attop = coproduct_component(alg, f, f.weight);
        REQUIRE(attop.rank == 1);
        CHECK(attop.pairs[0].first == f);
        CHECK(attop.pairs[0].second == functional_one(alg));
    }
}

TEST_CASE("underline_L examples") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0), z2 = zeta(alg, 1);
    CHECK(underline_L(alg, z1) ==
          std::set<Weight>{Weight({0, 0}), Weight({-1, 0})});
    CHECK(underline_L(alg, multiply(alg, z1, z2)) ==
          std::set<Weight>{Weight({0, 0}), Weight({-1, 0}), Weight({0, -1}),
                           Weight({-1, -1})});
    CHECK(underline_L(alg, phi_m12(alg)) ==
          std::set<Weight>{Weight({0, 0}), Weight({0, -1}), Weight({-1, -1})});
    // weight-range violations give empty components, not errors
    CHECK(coproduct_component(alg, phi_m12(alg), Weight({-1, 0})).rank == 0);
}

TEST_CASE("coassociativity of component extraction") {
    Algebra alg(CartanData::from_label("A3"));
    std::mt19937 rng(23);
    for (int t = 0; t < 6; ++t) {
        Functional f = random_o_element(alg, Weight({-2, -2, -1}), rng);
        if (f.is_zero()) continue;
        const Weight mu1({-1, -1, 0});
        const Weight mu2({-1, 0, -1});
        const Weight mid = f.weight - mu1 - mu2;
        // route A: extract at mu1, then split each right factor at mu2'
        // route B: the raw three-index array f(xyz)
        const auto& xs = alg.words(-mu1);
        const auto& ys = alg.words(-mid);
        const auto& zs = alg.words(-mu2);
        CoproductComponent outer = coproduct_component(alg, f, mu1);
        for (size_t xi = 0; xi < xs.size(); ++xi)
            for (size_t yi = 0; yi < ys.size(); ++yi)
                for (size_t zi = 0; zi < zs.size(); ++zi) {
                    Rat via(0);
                    for (const auto& [b, c] : outer.pairs) {
                        CoproductComponent innerc = coproduct_component(alg, c, mid);
                        Rat inner_val(0);
                        for (const auto& [m, r] : innerc.pairs)
                            inner_val += m.values[yi] * r.values[zi];
                        via += b.values[xi] * inner_val;
                    }
                    Word w = xs[xi];
                    w.insert(w.end(), ys[yi].begin(), ys[yi].end());
                    w.insert(w.end(), zs[zi].begin(), zs[zi].end());
                    CHECK(via == evaluate(alg, f, w));
                }
    }
}

TEST_CASE("divided-power action") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0);
    CHECK(e_act(alg, 0, 1, z1) == functional_one(alg));
    CHECK(e_act(alg, 0, 2, power(alg, z1, 2)) == functional_one(alg));
    CHECK(e_act(alg, 1, 1, z1).is_zero());
    CHECK(e_act(alg, 0, 0, z1) == z1);
}

TEST_CASE("ell examples") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0), z2 = zeta(alg, 1);
    CHECK(ell(alg, 0, z1) == 1);
    CHECK(ell(alg, 0, power(alg, z1, 2)) == 2);
    CHECK(ell(alg, 0, z2) == 0);
    CHECK_THROWS_AS(ell(alg, 0, functional_zero(alg, Weight({-1, 0}))), error);
}

TEST_CASE("star involution") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0);
    CHECK(star(alg, z1) == z1);
    CHECK(star(alg, power(alg, z1, 3)) == power(alg, z1, 3));
    CHECK(star(alg, phi_m12(alg)) == phi_m21(alg));
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        Functional f = random_o_element(alg, Weight({-2, -2}), rng);
        CHECK(star(alg, star(alg, f)) == f);
        // star is an algebra automorphism
        Functional g = random_o_element(alg, Weight({-1, -1}), rng);
        Functional h = random_o_element(alg, Weight({-1, 0}), rng);
        CHECK(star(alg, multiply(alg, g, h)) ==
              multiply(alg, star(alg, g), star(alg, h)));
        // <e_rev(w), f*> = <e_w, f> on all basis words
        const auto& ws = alg.words(Weight({2, 2}));
        Functional fs = star(alg, f);
        for (const Word& w : ws) {
            Word r = w;
            std::reverse(r.begin(), r.end());
            CHECK(evaluate(alg, fs, r) == evaluate(alg, f, w));
        }
    }
}

TEST_CASE("duality of structure against the word coproduct") {
    Algebra alg(CartanData::from_label("A2"));
    std::mt19937 rng(41);
    for (int t = 0; t < 8; ++t) {
        Functional f = random_o_element(alg, Weight({-2, -1}), rng);
        if (f.is_zero()) continue;
        // <xy, f> = sum over component pairs <x,b><y,c>
        const Weight mu({-1, 0});
        CoproductComponent comp = coproduct_component(alg, f, mu);
        for (const Word& x : alg.words(Weight({1, 0}))) {
            for (const Word& y : alg.words(Weight({1, 1}))) {
                Word xy = x;
                xy.insert(xy.end(), y.begin(), y.end());
                Rat lhs = evaluate(alg, f, xy);
                Rat rhs(0);
                for (const auto& [b, c] : comp.pairs)
                    rhs += evaluate(alg, b, x) * evaluate(alg, c, y);
                CHECK(lhs == rhs);
            }
        }
    }
}
