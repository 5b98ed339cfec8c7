#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggms/preproj.hpp"

using namespace ggms;

#ifndef GGMS_SOURCE_DATA_DIR
#define GGMS_SOURCE_DATA_DIR "data"
#endif

static PModule diagram_module(const CartanData& c, std::vector<std::string> lines) {
    return string_module(c, parse_diagram(lines, c));
}

TEST_CASE("basic diagrams") {
    CartanData a2 = CartanData::from_label("A2");
    PModule m12 = diagram_module(a2, {"1", " \\", "  2"});
    CHECK(m12.dims == std::vector<int>{1, 1});
    CHECK(check_relations(m12));
    auto [h, s] = head_socle_multiplicities(m12);
    CHECK(h == std::vector<int>{1, 0});
    CHECK(s == std::vector<int>{0, 1});

    PModule s1 = diagram_module(a2, {"1"});
    CHECK(s1.dims == std::vector<int>{1, 0});
    auto [h1, s1m] = head_socle_multiplicities(s1);
    CHECK(h1 == std::vector<int>{1, 0});
    CHECK(s1m == std::vector<int>{1, 0});

    CartanData a4 = CartanData::from_label("A4");
    PModule n = diagram_module(a4, {"1   3", " \\ /", "  2"});
    CHECK(n.dims == std::vector<int>{1, 1, 1, 0});

    // uniserial 1/2/1 violates the relations
    CHECK_THROWS_AS(diagram_module(a2, {"1", " \\", "  2", " /", "1"}), error);
}

TEST_CASE("a diagram that needs a negative sign") {
    CartanData a2 = CartanData::from_label("A2");
    PModule m = diagram_module(a2, {"  2", " / \\", "1   1", " \\ /", "  2"});
    CHECK(m.dims == std::vector<int>{2, 2});
    CHECK(check_relations(m));
    // at least one map entry is -1
    bool has_negative = false;
    for (const auto& [arrow, mat] : m.maps)
        for (const auto& row : mat)
            for (long x : row)
                if (x < 0) has_negative = true;
    CHECK(has_negative);
}

TEST_CASE("hom and ext dimensions") {
    CartanData a2 = CartanData::from_label("A2");
    PModule s1 = diagram_module(a2, {"1"});
    PModule s2 = diagram_module(a2, {"2"});
    PModule m12 = diagram_module(a2, {"1", " \\", "  2"});
    CHECK(hom_dim(s1, s1) == 1);
    CHECK(hom_dim(s1, s2) == 0);
    CHECK(hom_dim(m12, s1) == 1); // head projection
    CHECK(hom_dim(s1, m12) == 0);
    CHECK(hom_dim(s2, m12) == 1); // socle inclusion
    CHECK(ext1_dim(s1, s2) == 1);
    CHECK(ext1_dim(m12, m12) == 0);
    CHECK(ext1_dim(s1, s1) == 0);
    CHECK_THROWS_AS(hom_dim(s1, diagram_module(CartanData::from_label("A3"), {"1"})), error);
}

TEST_CASE("flag counting") {
    CartanData a2 = CartanData::from_label("A2");
    PModule m12 = diagram_module(a2, {"1", " \\", "  2"});
    FlagCount c21 = flag_euler(word_parse("21", 2), m12);
    CHECK(c21.euler == 1);
    FlagCount c12 = flag_euler(word_parse("12", 2), m12);
    CHECK(c12.euler == 0);

    PModule s1 = diagram_module(a2, {"1"});
    PModule twice = direct_sum(s1, s1);
    FlagCount c11 = flag_euler(word_parse("11", 2), twice);
    CHECK(c11.euler == 2);
    CHECK(c11.counts.at(2) == Rat(3)); // q + 1 at q = 2
    CHECK(c11.counts.at(3) == Rat(4));

    CHECK_THROWS_AS(flag_euler(word_parse("11", 2), m12), error);

    // the dimension bound is enforced
    PModule big = s1;
    for (int k = 0; k < 8; ++k) big = direct_sum(big, s1);
    CHECK_THROWS_AS(flag_euler(Word(9, 0), big), error);
}

TEST_CASE("phi of small modules") {
    Algebra alg(CartanData::from_label("A2"));
    CartanData a2 = alg.cartan();
    PModule s1 = diagram_module(a2, {"1"});
    CHECK(phi(alg, s1) == zeta(alg, 0));
    PModule m12 = diagram_module(a2, {"1", " \\", "  2"});
    Functional f = phi(alg, m12);
    CHECK(f.values == std::vector<Rat>{Rat(0), Rat(1)});

    // divided powers: phi(n S_1) = zeta_1^n
    PModule acc = s1;
    for (int n = 2; n <= 4; ++n) {
        acc = direct_sum(acc, s1);
        CHECK(phi(alg, acc) == power(alg, zeta(alg, 0), n));
    }
}

TEST_CASE("phi is multiplicative over direct sums") {
    Algebra alg(CartanData::from_label("A2"));
    CartanData a2 = alg.cartan();
    PModule s1 = diagram_module(a2, {"1"});
    PModule s2 = diagram_module(a2, {"2"});
    PModule m12 = diagram_module(a2, {"1", " \\", "  2"});
    CHECK(phi_product_check(alg, s1, s1));
    CHECK(phi_product_check(alg, m12, s1));
    CHECK(phi_product_check(alg, s1, s2));
    PModule m21 = diagram_module(a2, {"  2", " /", "1"});
    CHECK(phi_product_check(alg, m12, m21));
}

TEST_CASE("submodule dimension vectors and HN polytopes") {
    CartanData a2 = CartanData::from_label("A2");
    PModule s1 = diagram_module(a2, {"1"});
    auto seg = hn_polytope(s1);
    CHECK(seg.vertices.size() == 2);
    PModule m12 = diagram_module(a2, {"1", " \\", "  2"});
    auto tri = hn_polytope(m12);
    CHECK(tri.vertices.size() == 3);
    std::vector<Weight> subs = submodule_dimvecs(m12);
    CHECK(subs.size() == 3); // 0, S2, M12
    PModule m21 = diagram_module(a2, {"  2", " /", "1"});
    auto hexa = hn_polytope(direct_sum(m12, m21));
    CHECK(hexa.vertices.size() == 6);
}

TEST_CASE("catalog loading and the semicanonical basis in A2") {
    Algebra alg(CartanData::from_label("A2"));
    Catalog cat = load_catalog(alg, catalog_path(GGMS_SOURCE_DATA_DIR, "A2"));
    CHECK(cat.entries.size() == 4);
    CHECK(cat.find("1.2") != nullptr);
    CHECK(cat.find("nope") == nullptr);

    auto b1 = semicanonical_basis(alg, cat, Weight({1, 1}));
    REQUIRE(b1.size() == 2);
    auto ba = semicanonical_basis(alg, cat, Weight({1, 0}));
    REQUIRE(ba.size() == 1);
    CHECK(ba[0].value == zeta(alg, 0));
    auto b3 = semicanonical_basis(alg, cat, Weight({2, 2}));
    REQUIRE(b3.size() == 3);
    // labels: squares of the two strings plus the mixed sum
    std::vector<std::string> labels;
    for (const auto& b : b3) labels.push_back(b.label);
    CHECK(std::find(labels.begin(), labels.end(), "1.2^2") != labels.end());
    CHECK(std::find(labels.begin(), labels.end(), "2.1^2") != labels.end());
    CHECK(std::find(labels.begin(), labels.end(), "1.2+2.1") != labels.end());
}

TEST_CASE("catalog sizes for A3 and A4") {
    Algebra a3(CartanData::from_label("A3"));
    CHECK(load_catalog(a3, catalog_path(GGMS_SOURCE_DATA_DIR, "A3")).entries.size() == 12);
    Algebra a4(CartanData::from_label("A4"));
    CHECK(load_catalog(a4, catalog_path(GGMS_SOURCE_DATA_DIR, "A4")).entries.size() == 40);
}

TEST_CASE("HN polytope equals the negated polytope of phi") {
    Algebra alg(CartanData::from_label("A2"));
    Catalog cat = load_catalog(alg, catalog_path(GGMS_SOURCE_DATA_DIR, "A2"));
    for (size_t k = 0; k < cat.entries.size(); ++k) {
        RationalPolytope hn = hn_polytope(cat.entries[k].module);
        RationalPolytope pp = negate(pol(alg, cat.phi_of(alg, k)));
        CHECK(equals(hn, pp));
    }
}

TEST_CASE("interpolation uses control primes") {
    // a module whose counting polynomial has positive degree
    CartanData a2 = CartanData::from_label("A2");
    PModule s1 = diagram_module(a2, {"1"});
    PModule m = direct_sum(direct_sum(s1, s1), s1);
    FlagCount c = flag_euler(word_parse("111", 2), m);
    // complete flags of a 3-space: (q^2+q+1)(q+1)
    CHECK(c.counts.at(2) == Rat(21));
    CHECK(c.euler == 6);
    CHECK(c.counts.size() >= 5); // degree 3 needs 4 nodes + 2 controls
}
