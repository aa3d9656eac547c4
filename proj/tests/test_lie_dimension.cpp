#include "doctest.h"
#include "lienil/catalog.hpp"
#include "lienil/lie_dimension.hpp"
#include "support.hpp"

using namespace lienil;

namespace {

PcGroupPtr group(const char* spec) { return build_from_spec(spec).group; }

// D_(m) straight from the product formula over brute-force gamma_i and powers.
std::set<std::uint64_t> passi_brute(const PcGroupPtr& G, int p, int m) {
    auto gammas = ref::lower_central(G);
    std::vector<Element> gens;
    for (std::size_t i = 2; i <= gammas.size(); ++i) {
        long long q = 1;
        for (;;) {
            if (static_cast<long long>(i - 1) * q >= m - 1) {
                for (const auto& x : ref::decode_all(G, ref::powers(G, gammas[i - 1], q))) gens.push_back(x);
                break;
            }
            q *= p;
        }
    }
    return ref::generated(G, gens);
}

int log_p(std::uint64_t n, int p) {
    int k = 0;
    while (n > 1) n /= static_cast<std::uint64_t>(p), ++k;
    return k;
}

}  // namespace

TEST_CASE("D_(2) is the derived subgroup") {
    for (const auto& e : builtin_catalog(729)) {
        CAPTURE(e.name);
        int p = e.group->p();
        auto L = lower_central_series(e.group);
        CHECK(lie_dimension_subgroup(e.group, p, 2) == L[1]);
    }
}

TEST_CASE("Dihedral(8) has D_(3) trivial") {
    auto G = group("dihedral:8");
    CHECK(lie_dimension_subgroup(G, 2, 3).order() == 1);
}

TEST_CASE("G' = C49xC7xC7 with gamma_3 in G'^7 has D_(8) = G'^7") {
    auto G = build_item1_witness().group;
    auto L = lower_central_series(G);
    CHECK(fingerprint(L[1]).str() == "C49xC7xC7");
    auto P = power_subgroup(L[1], 7);
    CHECK(P.contains(L[2]));
    auto D8 = lie_dimension_subgroup(G, 7, 8);
    CHECK(D8 == P);
    CHECK(D8.order() == 7);
    auto d = d_sequence(G, 7);
    CHECK(d.str() == "{d(2)=3, d(8)=1}");
    CHECK(jennings_index(d) == 62);
}

TEST_CASE("d-sequences of small groups") {
    CHECK(d_sequence(group("abelian:2:8,4"), 2).d.empty());
    CHECK(d_sequence(group("dihedral:8"), 2).d == std::map<int, int>{{2, 1}});
    CHECK(d_sequence(group("dihedral:16"), 2).d == std::map<int, int>{{2, 1}, {3, 1}});
    CHECK(d_sequence(group("free_class2:2:5"), 2).d == std::map<int, int>{{2, 10}});
}

TEST_CASE("Jennings index") {
    CHECK(jennings_index(DSequence{2, {}}) == 2);
    CHECK(jennings_index(DSequence{2, {{2, 1}}}) == 3);
    CHECK(jennings_index(DSequence{7, {{2, 3}, {8, 1}}}) == 62);
    CHECK(jennings_index(DSequence{2, {{2, 1}, {3, 1}}}) == 5);
}

TEST_CASE("upper index") {
    CHECK(upper_index(group("abelian:3:9,3"), 3) == 2);
    CHECK(upper_index(group("heisenberg:5"), 5) == 6);
    CHECK(upper_index(group("free_class2:2:5"), 2) == 12);
    CHECK(upper_index(group("dihedral:16"), 2) == 5);
    CHECK(upper_index(group("heisenberg:7"), 7) == 8);
}

TEST_CASE("the Lie dimension chain matches the product formula by brute force") {
    for (const auto& e : builtin_catalog(256)) {
        CAPTURE(e.name);
        const auto& G = e.group;
        int p = G->p();
        auto chain = lie_dimension_chain(G, p);
        REQUIRE(!chain.terms.empty());
        CHECK(chain.terms.back().order() == 1);
        for (std::size_t k = 0; k < chain.terms.size(); ++k) {
            int m = static_cast<int>(k) + 2;
            CHECK(ref::as_set(chain.terms[k]) == passi_brute(G, p, m));
            if (k > 0) CHECK(chain.terms[k - 1].contains(chain.terms[k]));
        }
    }
}

TEST_CASE("the d-sequence sums to log_p |G'|") {
    for (const auto& e : builtin_catalog()) {
        CAPTURE(e.name);
        int p = e.group->p();
        auto L = lower_central_series(e.group);
        CHECK(d_sequence(e.group, p).total() == log_p(L[1].order(), p));
    }
}

TEST_CASE("a group at the wrong prime is not Lie nilpotent") {
    CHECK_THROWS_AS(d_sequence(group("heisenberg:3"), 5), NotLieNilpotent);
    CHECK(d_sequence(group("abelian:3:9"), 5).d.empty());
}

TEST_CASE("DSequence helpers") {
    DSequence d{7, {{2, 3}, {8, 1}}};
    CHECK(d.at(2) == 3);
    CHECK(d.at(5) == 0);
    CHECK(d.total() == 4);
    CHECK(d.weight() == 10);
    CHECK(d.max_index() == 8);
    CHECK(DSequence{2, {}}.max_index() == 1);
}
