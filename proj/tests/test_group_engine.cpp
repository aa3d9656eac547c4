#include <array>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "lienil/catalog.hpp"
#include "lienil/group_engine.hpp"
#include "support.hpp"

using namespace lienil;

namespace {

const char* kHeis3 =
    "# Heisenberg group at p = 3\n"
    "p 3\n"
    "gens 3\n"
    "comm 2 1 : g3^1\n";

Element el(std::initializer_list<int> xs) {
    Element e;
    std::size_t i = 0;
    for (int x : xs) e[i++] = static_cast<std::uint8_t>(x);
    return e;
}

// Upper unitriangular 3x3 matrices over Z/p, stored as (x, y, z) for
// [[1,x,z],[0,1,y],[0,0,1]].
struct Unitri {
    int p;
    std::array<int, 3> v;
    Unitri operator*(const Unitri& o) const {
        return {p, {(v[0] + o.v[0]) % p, (v[1] + o.v[1]) % p, (v[2] + o.v[2] + v[0] * o.v[1]) % p}};
    }
    bool operator==(const Unitri& o) const { return v == o.v; }
};

// a -> E12, b -> E23, c -> [b,a] in the matrix group, which is E13^-1.
Unitri model(int p, const Element& x) {
    Unitri a{p, {1, 0, 0}}, b{p, {0, 1, 0}}, c{p, {0, 0, p - 1}}, r{p, {0, 0, 0}};
    for (int i = 0; i < x[0]; ++i) r = r * a;
    for (int i = 0; i < x[1]; ++i) r = r * b;
    for (int i = 0; i < x[2]; ++i) r = r * c;
    return r;
}

}  // namespace

TEST_CASE("parse the Heisenberg group at p = 3") {
    auto G = parse_presentation(kHeis3);
    CHECK(G->p() == 3);
    CHECK(G->ngens() == 3);
    CHECK(G->order() == 27);
    int nontrivial = 0;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < j; ++i) nontrivial += !G->commutator_relation(j, i).is_identity();
    CHECK(nontrivial == 1);
    CHECK(G->commutator_relation(1, 0) == el({0, 0, 1}));
}

TEST_CASE("relation on generators in the wrong order is rejected") {
    try {
        parse_presentation("p 3\ngens 3\ncomm 1 2 : g3^1\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.detail()).find("relation referencing earlier-or-equal generators") != std::string::npos);
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_presentation("p 3\ngens 3\npow 2 : g1^1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("p 3\ngens 3\ncomm 3 2 : g1^1\n"), ParseError);
}

TEST_CASE("other parse errors carry a position") {
    CHECK_THROWS_AS(parse_presentation("p 4\ngens 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("p 3\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("p 3\ngens 2\npow 1 : g2^3\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("p 3\ngens 2\nfoo 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("p 3\ngens 3\ncomm 3 1 : g3 g2\n"), ParseError);
}

TEST_CASE("seven generators with one commutator relation at p = 5") {
    const char* src =
        "p 5\n"
        "gens 7\n"
        "# a b c d e f g, [b,a] = c, all p-th powers trivial\n"
        "comm 2 1 : g3^1\n";
    auto G = parse_presentation(src);
    CHECK(G->ngens() == 7);
    CHECK(G->order() == 78125);
    int nontrivial = 0;
    for (int j = 0; j < 7; ++j)
        for (int i = 0; i < j; ++i) nontrivial += !G->commutator_relation(j, i).is_identity();
    CHECK(nontrivial == 1);
}

TEST_CASE("an inconsistent presentation is rejected with the overlap") {
    // g2 = g1^2 must commute with g1.
    try {
        parse_presentation("p 2\ngens 3\npow 1 : g2^1\ncomm 2 1 : g3^1\n");
        FAIL("no error");
    } catch (const InconsistentPresentation& e) {
        CHECK(std::string(e.what()).find("overlap") != std::string::npos);
    }
}

TEST_CASE("Heisenberg(3) multiplication") {
    auto G = parse_presentation(kHeis3);
    Element a = el({1, 0, 0}), b = el({0, 1, 0}), c = el({0, 0, 1});
    CHECK(G->multiply(G->identity(), b) == b);
    CHECK(G->multiply(b, a) == el({1, 1, 1}));
    CHECK(G->multiply(el({1, 1, 0}), el({1, 1, 0})) == el({2, 2, 1}));
    CHECK(G->commutator(b, a) == c);
    CHECK(G->commutator(a, a).is_identity());
    CHECK(G->element_order(el({1, 1, 0})) == 3);
    CHECK(ref::order_of(G, el({1, 1, 0})) == 3);
    CHECK(G->power(el({1, 1, 0}), 3).is_identity());
}

TEST_CASE("Heisenberg groups agree with the unitriangular matrix model") {
    for (int p : {3, 5}) {
        auto G = build_heisenberg(p).group;
        auto all = ref::all_elements(G);
        for (const auto& x : all)
            for (const auto& y : all) REQUIRE(model(p, G->multiply(x, y)) == model(p, x) * model(p, y));
        // the model is injective, so this is an isomorphism onto the matrix group
        std::set<std::array<int, 3>> images;
        for (const auto& x : all) images.insert(model(p, x).v);
        CHECK(images.size() == all.size());
    }
}

TEST_CASE("group axioms on random elements") {
    std::mt19937 rng(99);
    for (const char* spec : {"dihedral:32", "quaternion:16", "heisenberg:7", "free_class2:3:3", "item67:3", "abelian:3:27,9"}) {
        auto G = build_from_spec(spec).group;
        std::uniform_int_distribution<std::uint64_t> pick(0, G->order() - 1);
        for (int t = 0; t < 300; ++t) {
            Element x = G->decode(pick(rng)), y = G->decode(pick(rng)), z = G->decode(pick(rng));
            CHECK(G->multiply(G->multiply(x, y), z) == G->multiply(x, G->multiply(y, z)));
            CHECK(G->multiply(x, G->inverse(x)).is_identity());
            CHECK(G->multiply(G->inverse(x), x).is_identity());
            CHECK(G->code(G->decode(G->code(x))) == G->code(x));
            Element xi = G->inverse(x), yi = G->inverse(y);
            CHECK(G->commutator(x, y) == G->multiply(G->multiply(xi, yi), G->multiply(x, y)));
            CHECK(G->conjugate(x, y) == G->multiply(yi, G->multiply(x, y)));
            Element p5 = G->identity();
            for (int k = 0; k < 5; ++k) p5 = G->multiply(p5, x);
            CHECK(G->power(x, 5) == p5);
            CHECK(G->power(x, -1) == xi);
            CHECK(G->element_order(x) == ref::order_of(G, x));
        }
    }
}

TEST_CASE("format and parse round trip") {
    for (const char* spec : {"dihedral:16", "quaternion:32", "item46:5", "free_class2:2:4"}) {
        auto G = build_from_spec(spec).group;
        auto text = format_presentation(G->data());
        auto H = parse_presentation(text);
        CHECK(format_presentation(H->data()) == text);
        CHECK(H->order() == G->order());
    }
}

TEST_CASE("word and format") {
    auto G = parse_presentation(kHeis3);
    CHECK(G->word(G->identity()) == "1");
    CHECK(G->word(el({2, 0, 1})) == "g1^2 g3^1");
    CHECK(G->format(el({2, 0, 1})) == "(2,0,1)");
}
