#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggms/linalg.hpp"
#include "ggms/rootsys.hpp"

#include <set>

using namespace ggms;

// Independent oracle: the full root system as the W-orbit of the simple
// roots under all reflections, restricted to Q+.
static std::set<std::vector<int>> roots_by_reflection(const CartanData& c) {
    std::set<std::vector<int>> all;
    std::vector<Weight> queue;
    for (int i = 0; i < c.rank; ++i) {
        Weight w = Weight::zero(c.rank);
        w.c[i] = 1;
        all.insert(w.c);
        queue.push_back(w);
    }
    for (size_t q = 0; q < queue.size(); ++q) {
        Weight beta = queue[q];
        for (int i = 0; i < c.rank; ++i) {
            int pair = 0;
            for (int j = 0; j < c.rank; ++j) pair += c.a[i][j] * beta.c[j];
            Weight img = beta;
            img.c[i] -= pair;
            if (all.insert(img.c).second) queue.push_back(img);
        }
    }
    std::set<std::vector<int>> pos;
    for (const auto& v : all) {
        bool nonneg = true;
        for (int x : v)
            if (x < 0) nonneg = false;
        if (nonneg) pos.insert(v);
    }
    return pos;
}

TEST_CASE("positive roots by closure match the reflection oracle") {
    for (const char* label : {"A1", "A2", "A3", "A4", "B2", "D4"}) {
        CartanData c = CartanData::from_label(label);
        auto got = positive_roots(c);
        auto oracle = roots_by_reflection(c);
        CHECK(got.size() == oracle.size());
        for (const Weight& w : got) {
            CHECK(oracle.count(w.c) == 1);
            CHECK(w.in_q_plus());
            CHECK(w.height() >= 1);
        }
    }
}

TEST_CASE("positive root counts") {
    CHECK(positive_roots(CartanData::from_label("A2")).size() == 3);
    CHECK(positive_roots(CartanData::from_label("B2")).size() == 4);
    CHECK(positive_roots(CartanData::from_label("A4")).size() == 10);
    CHECK(positive_roots(CartanData::from_label("D4")).size() == 12);
}

TEST_CASE("A2 roots are the expected set") {
    CartanData c = CartanData::from_label("A2");
    auto roots = positive_roots(c);
    std::set<std::vector<int>> s;
    for (const auto& r : roots) s.insert(r.c);
    CHECK(s == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("rejects non-finite-type input") {
    CHECK_THROWS_AS(CartanData::from_matrix({{2, -2}, {-2, 2}}, "affine"), error);
    CHECK_THROWS_AS(CartanData::from_matrix({{2, 1}, {1, 2}}, "bad"), error);
    CHECK_THROWS_AS(CartanData::from_label("E8"), error);
}

// Oracle: explicit multiset enumeration over positive roots.
static long kostant_bruteforce(const CartanData& c, const Weight& nu) {
    auto roots = positive_roots(c);
    long count = 0;
    auto rec = [&](auto&& self, size_t idx, Weight rest) -> void {
        if (rest.is_zero()) {
            ++count;
            return;
        }
        if (idx == roots.size()) return;
        Weight r = rest;
        for (;;) {
            self(self, idx + 1, r);
            bool ok = true;
            for (int i = 0; i < r.rank(); ++i) {
                r.c[i] -= roots[idx].c[i];
                if (r.c[i] < 0) ok = false;
            }
            if (!ok) break;
        }
    };
    rec(rec, 0, nu);
    return count;
}

TEST_CASE("kostant_dim examples") {
    CartanData a2 = CartanData::from_label("A2");
    CHECK(kostant_dim(a2, Weight({0, 0})) == 1);
    CHECK(kostant_dim(a2, Weight({1, 1})) == 2);
    CHECK(kostant_dim(a2, Weight({2, 2})) == 3);
}

TEST_CASE("kostant_dim equals brute-force multiset enumeration, height <= 8") {
    for (const char* label : {"A2", "A3", "B2"}) {
        CartanData c = CartanData::from_label(label);
        int hmax = (c.rank == 2) ? 8 : 6;
        std::vector<int> box(c.rank, hmax);
        for (const Weight& nu : weights_below(Weight(box))) {
            if (nu.height() > hmax) continue;
            CHECK(kostant_dim(c, nu) == kostant_bruteforce(c, nu));
        }
    }
}

TEST_CASE("weyl chamber counts") {
    CHECK(weyl_chambers(CartanData::from_label("A2")).size() == 6);
    CHECK(weyl_chambers(CartanData::from_label("A3")).size() == 24);
    CHECK(weyl_chambers(CartanData::from_label("B2")).size() == 8);
}

static bool in_cone(const Cone& c, const std::vector<Rat>& x) {
    const int d = int(x.size());
    Mat a(d, int(c.generators.size()));
    for (int i = 0; i < d; ++i)
        for (size_t k = 0; k < c.generators.size(); ++k) a(i, int(k)) = c.generators[k][i];
    return lp_feasible(a, x);
}

TEST_CASE("weyl chambers tile theta-space") {
    for (const char* label : {"A2", "B2"}) {
        CartanData c = CartanData::from_label(label);
        auto chambers = weyl_chambers(c);
        // sample a deterministic grid of points
        for (int x = -3; x <= 3; ++x) {
            for (int y = -3; y <= 3; ++y) {
                std::vector<Rat> p{Rat(x), Rat(y)};
                int hits = 0;
                for (const auto& ch : chambers)
                    if (in_cone(ch, p)) ++hits;
                CHECK(hits >= 1);
            }
        }
        // interior points of each chamber lie in exactly one chamber
        for (const auto& ch : chambers) {
            std::vector<Rat> interior(c.rank, Rat(0));
            for (const auto& g : ch.generators)
                for (int i = 0; i < c.rank; ++i) interior[i] += g[i];
            int hits = 0;
            for (const auto& other : chambers)
                if (in_cone(other, interior)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("symmetrized form") {
    CartanData a2 = CartanData::from_label("A2");
    CHECK(symmetrized_form(a2, Weight({1, 0}), Weight({0, 1})) == Rat(-1));
    CHECK(symmetrized_form(a2, Weight({1, 1}), Weight({1, 1})) == Rat(2));
    CHECK(symmetrized_form(a2, Weight({1, 0}), Weight({1, 0})) == Rat(2));
    // bilinear + symmetric on B2 (unequal root lengths)
    CartanData b2 = CartanData::from_label("B2");
    CHECK(symmetrized_form(b2, Weight({1, 0}), Weight({1, 0})) == Rat(4));
    CHECK(symmetrized_form(b2, Weight({0, 1}), Weight({0, 1})) == Rat(2));
    CHECK(symmetrized_form(b2, Weight({1, 0}), Weight({0, 1})) ==
          symmetrized_form(b2, Weight({0, 1}), Weight({1, 0})));
}
