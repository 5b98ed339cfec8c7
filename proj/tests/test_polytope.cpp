#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggms/polytope.hpp"

using namespace ggms;

static std::vector<Rat> pt(std::initializer_list<int> xs) {
    std::vector<Rat> v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

TEST_CASE("hull basics") {
    auto tri = hull({pt({0, 0}), pt({0, -1}), pt({-1, -1})});
    CHECK(tri.vertices.size() == 3);
    auto single = hull({pt({2, 3})});
    CHECK(single.vertices == std::vector<std::vector<Rat>>{pt({2, 3})});
    auto seg = hull({pt({0, 0}), pt({1, 1}), pt({2, 2})});
    CHECK(seg.vertices.size() == 2);
    CHECK(seg.vertices == std::vector<std::vector<Rat>>{pt({0, 0}), pt({2, 2})});
    // interior point of a square is dropped
    auto sq = hull({pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({2, 2}), pt({1, 1})});
    CHECK(sq.vertices.size() == 4);
    CHECK_THROWS_AS(hull({pt({0, 0}), pt({0, 0, 0})}), error);
}

TEST_CASE("hull is idempotent") {
    auto p = hull({pt({0, 0}), pt({-1, 0}), pt({0, -1}), pt({-1, -1})});
    auto q = hull(p.vertices);
    CHECK(equals(p, q));
}

TEST_CASE("pol of basic functionals") {
    Algebra alg(CartanData::from_label("A2"));
    Functional z1 = zeta(alg, 0);
    auto seg = pol(alg, z1);
    CHECK(seg.vertices == std::vector<std::vector<Rat>>{pt({-1, 0}), pt({0, 0})});
    Functional m12{Weight({-1, -1}), {Rat(0), Rat(1)}};
    auto tri = pol(alg, m12);
    CHECK(tri.vertices.size() == 3);
    CHECK(point_in_hull(tri, pt({0, -1})));
    auto quad = pol(alg, multiply(alg, z1, zeta(alg, 1)));
    CHECK(quad.vertices.size() == 4);
    CHECK_THROWS_AS(pol(alg, functional_zero(alg, Weight({-1, 0}))), error);
}

TEST_CASE("min_face") {
    auto tri = hull({pt({0, 0}), pt({0, -1}), pt({-1, -1})});
    auto f = min_face(tri, StabilityParam({Rat(1), Rat(0)}));
    CHECK(f.vertices == std::vector<std::vector<Rat>>{pt({-1, -1})});
    auto all = min_face(tri, StabilityParam::zero(2));
    CHECK(equals(all, tri));
    auto seg = hull({pt({0, 0}), pt({-1, 0})});
    auto v0 = min_face(seg, StabilityParam({Rat(-1), Rat(0)}));
    CHECK(v0.vertices == std::vector<std::vector<Rat>>{pt({0, 0})});
    // min_face(P) is included in P
    CHECK(includes(tri, f));
}

TEST_CASE("ggms tests in A2") {
    CartanData a2 = CartanData::from_label("A2");
    auto tri = hull({pt({0, 0}), pt({0, -1}), pt({-1, -1})});
    CHECK(is_ggms(tri, a2));
    auto bad = hull({pt({0, 0}), pt({-1, -2})});
    CHECK_FALSE(is_ggms(bad, a2));
    auto point = hull({pt({-2, -1})});
    CHECK(is_ggms(point, a2));
    // segments along roots are fine
    Algebra alg(a2);
    CHECK(is_ggms(pol(alg, zeta(alg, 0)), a2));
    CHECK(is_ggms(pol(alg, zeta(alg, 1)), a2));
}

TEST_CASE("inclusion order") {
    auto tri = hull({pt({0, 0}), pt({0, -1}), pt({-1, -1})});
    auto quad = hull({pt({0, 0}), pt({-1, 0}), pt({0, -1}), pt({-1, -1})});
    CHECK(includes(quad, tri));
    CHECK_FALSE(includes(tri, quad));
    CHECK(includes(tri, tri));
    CHECK(equals(tri, tri));
    CHECK_FALSE(equals(tri, quad));
}

TEST_CASE("negate and translate") {
    auto tri = hull({pt({0, 0}), pt({0, -1}), pt({-1, -1})});
    auto neg = negate(tri);
    CHECK(point_in_hull(neg, pt({1, 1})));
    auto shifted = translate(tri, pt({1, 1}));
    CHECK(point_in_hull(shifted, pt({1, 1})));
    CHECK(point_in_hull(shifted, pt({0, 0})));
}
