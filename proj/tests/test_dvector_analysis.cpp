#include <algorithm>
#include <functional>

#include "doctest.h"
#include "lienil/catalog.hpp"
#include "lienil/dvector_analysis.hpp"

using namespace lienil;

namespace {

bool has(const std::vector<DVector>& vs, const std::map<int, int>& d) {
    return std::any_of(vs.begin(), vs.end(), [&](const DVector& v) { return v.d == d; });
}

// Solutions of sum_{m>=1} m * x_m = w by nested choice of each x_m.
std::size_t count_solutions(int w) {
    std::function<std::size_t(int, int)> rec = [&](int m, int left) -> std::size_t {
        if (left == 0) return 1;
        if (m > left) return 0;
        std::size_t n = 0;
        for (int x = 0; m * x <= left; ++x) n += rec(m + 1, left - m * x);
        return n;
    };
    return rec(1, w);
}

}  // namespace

TEST_CASE("theta_p'") {
    CHECK(theta_p_prime(3, 6) == 2);
    CHECK(theta_p_prime(5, 4) == 4);
    CHECK(theta_p_prime(2, 48) == 3);
    CHECK(theta_p_prime(7, 49) == 1);
}

TEST_CASE("the zero vector passes the lemma") {
    CHECK(lemma_constraints_ok(make_dvector(3, {})).ok);
}

TEST_CASE("d(2)=1, d(4)=3 passes the lemma at p = 3") {
    auto r = lemma_constraints_ok(make_dvector(3, {{2, 1}, {4, 3}}));
    CHECK(r.ok);
}

TEST_CASE("d(2)=1, d(4)=3 fails the lemma at p = 5") {
    auto r = lemma_constraints_ok(make_dvector(5, {{2, 1}, {4, 3}}));
    CHECK_FALSE(r.ok);
    auto v2 = r.part(2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].m == 2);
    CHECK(v2[0].witness == 3);
    CHECK(r.part(1).empty());
}

TEST_CASE("the literal first part at p = 3 fires on d(3) = 0") {
    // l = 2 < 3 = pm with d(3) = 0, and d(4) = 3 > d(2) = 1.
    auto r = lemma_constraints_ok(make_dvector(3, {{2, 1}, {4, 3}}));
    auto v1 = r.part(1);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].m == 1);
    CHECK(v1[0].witness == 2);
    CHECK(r.part(2).empty());
}

TEST_CASE("second part alone") {
    // d(3) = 0 and s = 4 has theta_3'(4) = 4 >= theta_3'(2) = 2
    auto r = lemma_constraints_ok(make_dvector(3, {{2, 6}, {5, 1}}));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.part(2).empty());
    // at p = 2 every s qualifies once d(3) = 0
    CHECK_FALSE(lemma_constraints_ok(make_dvector(2, {{2, 8}, {4, 1}})).ok);
}

TEST_CASE("first part alone") {
    // p = 2, m = 2: d(4) = 0 with l = 3 < 4, so d(5) <= d(3) is required.
    auto r = lemma_constraints_ok(make_dvector(2, {{2, 1}, {3, 1}, {5, 2}}));
    CHECK_FALSE(r.part(1).empty());
}

TEST_CASE("weight 1") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        auto vs = enumerate_admissible(p, 1);
        REQUIRE(vs.size() == 1);
        CHECK(vs[0].d == std::map<int, int>{{2, 1}});
    }
}

TEST_CASE("weight 10 at p = 7 keeps d(8) only in {d(2)=3, d(8)=1}") {
    auto vs = enumerate_admissible(7, 10);
    CHECK(has(vs, {{2, 3}, {8, 1}}));
    int with_d8 = 0;
    for (const auto& v : vs) with_d8 += v.at(8) != 0;
    CHECK(with_d8 == 2);  // {d(2)=3, d(8)=1} and {d(2)=1, d(3)=1, d(8)=1}
    for (const auto& v : enumerate_weight(7, 10))
        if (v.at(8) != 0 && !has(vs, v.d)) CHECK_FALSE(lemma_constraints_ok(v).ok);
}

TEST_CASE("d(8) survives at no other prime") {
    for (int p : {2, 3, 5, 11, 13})
        for (const auto& v : enumerate_admissible(p, 10)) CHECK(v.at(8) == 0);
}

TEST_CASE("weight 10 at p = 11 uses only the p-independent branches") {
    auto vs = enumerate_admissible(11, 10);
    CHECK(has(vs, {{2, 10}}));
    CHECK(has(vs, {{2, 8}, {3, 1}}));
    for (const auto& v : vs) CHECK(v.max_index() <= 5);
    CHECK(vs.size() == 10);
}

TEST_CASE("enumeration is exact, filtered and ordered") {
    CHECK(enumerate_weight(2, 10).size() == count_solutions(10));
    CHECK(count_solutions(10) == 42);
    for (int w = 1; w <= 12; ++w) CHECK(enumerate_weight(3, w).size() == count_solutions(w));
    for (int p : {2, 3, 5, 7, 11}) {
        auto all = enumerate_weight(p, 10);
        auto ok = enumerate_admissible(p, 10);
        std::size_t passing = 0;
        for (const auto& v : all) passing += lemma_constraints_ok(v).ok;
        CHECK(ok.size() == passing);
        for (const auto& v : ok) {
            CHECK(v.weight() == 10);
            CHECK(lemma_constraints_ok(v).ok);
        }
        auto key = [](const DVector& v) {
            std::vector<int> k;
            for (int m = 2; m <= 11; ++m) k.push_back(v.at(m));
            return k;
        };
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(key(all[i - 1]) < key(all[i]));
    }
}

TEST_CASE("proof case report") {
    auto r1 = proof_case_report(1);
    CHECK(r1.survivors.size() == kReportPrimes.size());
    for (const auto& [p, vs] : r1.survivors) {
        REQUIRE(vs.size() == 1);
        CHECK(vs[0].d == std::map<int, int>{{2, 1}});
    }
    auto r = proof_case_report(10);
    CHECK(has(r.survivors.at(5), {{2, 5}, {6, 1}}));
    CHECK(has(r.survivors.at(2), {{2, 4}, {3, 1}, {5, 1}}));
    for (int p : {2, 3, 7, 11, 13}) CHECK_FALSE(has(r.survivors.at(p), {{2, 5}, {6, 1}}));
    for (int p : {3, 5, 7, 11, 13}) CHECK_FALSE(has(r.survivors.at(p), {{2, 4}, {3, 1}, {5, 1}}));
    CHECK(r.text() == proof_case_report(10).text());
}

TEST_CASE("witness d-sequences are admissible") {
    for (const auto& e : builtin_catalog()) {
        if (!e.witness_item) continue;
        CAPTURE(e.name);
        int p = e.group->p();
        auto d = d_sequence(e.group, p);
        CHECK(has(enumerate_admissible(p, 10), d.d));
    }
}

TEST_CASE("realizable d-sequences pass the lemma") {
    for (const auto& e : builtin_catalog()) {
        CAPTURE(e.name);
        auto d = d_sequence(e.group, e.group->p());
        auto r = lemma_constraints_ok(d);
        CHECK(r.ok);
    }
}
