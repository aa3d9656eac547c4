#include <random>
#include <set>

#include "doctest.h"
#include "lienil/fp_linalg.hpp"

using namespace lienil;

namespace {

// Plain Gaussian elimination on int rows; returns the rank only.
std::size_t naive_rank(int p, std::vector<std::vector<int>> a) {
    std::size_t rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t r = rank;
        while (r < a.size() && a[r][c] % p == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[r], a[rank]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank) continue;
            int f = a[i][c] % p;
            for (std::size_t k = 0; k < cols; ++k) a[i][k] = ((a[i][k] * a[rank][c] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Every vector of GF(p)^n, as codes in base p.
std::vector<FpVector> all_vectors(int p, std::size_t n) {
    std::vector<FpVector> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t c = 0; c < total; ++c) {
        FpVector v(n);
        std::size_t x = c;
        for (std::size_t i = 0; i < n; ++i, x /= static_cast<std::size_t>(p)) v[i] = static_cast<std::uint8_t>(x % p);
        out.push_back(v);
    }
    return out;
}

std::size_t count_members(const FpSubspace& s) {
    std::size_t n = 0;
    for (const auto& v : all_vectors(s.p(), s.ambient_dim())) n += s.contains(v);
    return n;
}

FpSubspace random_subspace(std::mt19937& rng, int p, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (;;) {
        std::vector<FpVector> vs;
        for (std::size_t i = 0; i < k; ++i) {
            FpVector v(n);
            for (auto& x : v) x = static_cast<std::uint8_t>(dist(rng));
            vs.push_back(v);
        }
        auto s = FpSubspace::span(p, n, vs);
        if (s.dim() == k) return s;
    }
}

FpVector unit(std::size_t n, std::size_t i) {
    FpVector v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("rref of the identity over GF(2) is itself") {
    FpMatrix m(2, {{1, 0}, {0, 1}});
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.form == m);
}

TEST_CASE("rref collapses equal rows") {
    auto r = rref(FpMatrix(2, {{1, 1}, {1, 1}}));
    CHECK(r.rank == 1);
    CHECK(r.form == FpMatrix(2, {{1, 1}, {0, 0}}));
}

TEST_CASE("rref of [[2,4],[1,3]] over GF(5) has full rank") {
    auto r = rref(FpMatrix(5, {{2, 4}, {1, 3}}));
    CHECK(r.rank == 2);
    CHECK(r.form == FpMatrix(5, {{1, 0}, {0, 1}}));
    CHECK(naive_rank(5, {{2, 4}, {1, 3}}) == 2);
}

TEST_CASE("rref rank agrees with naive elimination on random matrices") {
    std::mt19937 rng(12345);
    for (int p : {2, 3, 5, 7}) {
        std::uniform_int_distribution<int> dist(0, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
            std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
            for (auto& row : a)
                for (auto& x : row) x = dist(rng);
            auto r = rref(FpMatrix(p, a));
            CHECK(r.rank == naive_rank(p, a));
            // idempotent, pivots are 1
            CHECK(rref(r.form).form == r.form);
            for (std::size_t i = 0; i < r.rank; ++i) {
                std::size_t c = 0;
                while (r.form.at(i, c) == 0) ++c;
                CHECK(r.form.at(i, c) == 1);
            }
        }
    }
}

TEST_CASE("FpMatrix rejects a composite modulus") {
    CHECK_THROWS_AS(FpMatrix(4, 2, 2), FieldError);
}

TEST_CASE("join with the zero subspace") {
    auto s = FpSubspace::span(3, 3, {{1, 2, 0}, {0, 1, 1}});
    CHECK(subspace_join(s, FpSubspace::zero(3, 3)) == s);
}

TEST_CASE("join of two coordinate lines in GF(3)^3") {
    auto a = FpSubspace::span(3, 3, {unit(3, 0)});
    auto b = FpSubspace::span(3, 3, {unit(3, 1)});
    CHECK(subspace_join(a, b).dim() == 2);
}

TEST_CASE("join and meet satisfy the dimension formula by enumeration") {
    std::mt19937 rng(7);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 10; ++trial) {
        auto a = random_subspace(rng, 2, 6, 3);
        auto b = random_subspace(rng, 2, 6, 2);
        auto meet = subspace_meet(a, b);
        auto join = subspace_join(a, b);
        // brute-force sizes of the meet and of a + b
        std::size_t both = 0;
        for (const auto& v : all_vectors(2, 6)) both += a.contains(v) && b.contains(v);
        CHECK(count_members(meet) == both);
        CHECK(count_members(join) == (std::size_t{1} << join.dim()));
        CHECK(a.dim() + b.dim() == join.dim() + meet.dim());
        if (meet.dim() == 1) {
            CHECK(join.dim() == 4);
            ++found;
        }
    }
    CHECK(found == 10);
}

TEST_CASE("contains") {
    auto s = FpSubspace::span(5, 2, {{1, 2}, {0, 1}});
    CHECK(subspace_contains(s, FpVector{0, 0}));
    CHECK(subspace_contains(s, FpVector{1, 0}));
    // all 25 combinations x*[1,2] + y*[0,1]
    bool hit = false;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) hit |= (x % 5 == 1 && (2 * x + y) % 5 == 0);
    CHECK(hit);
    auto e1 = FpSubspace::span(2, 2, {unit(2, 0)});
    CHECK_FALSE(subspace_contains(e1, unit(2, 1)));
    CHECK(subspace_contains(e1, FpVector{0, 0}));
}

TEST_CASE("close_under with no operators is the identity") {
    auto s = FpSubspace::span(3, 4, {{1, 0, 2, 0}});
    CHECK(close_under(s, {}) == s);
}

TEST_CASE("close_under a cyclic shift reaches the full space") {
    LinearMap shift = [](std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
        for (std::size_t i = 0; i < in.size(); ++i) out[(i + 1) % in.size()] = in[i];
    };
    auto s = close_under(FpSubspace::span(2, 3, {unit(3, 0)}), {shift});
    CHECK(s == FpSubspace::full(2, 3));
}

TEST_CASE("close_under a projection from e1+e2") {
    LinearMap proj = [](std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
        out[0] = in[0];
        out[1] = 0;
    };
    auto s = close_under(FpSubspace::span(2, 2, {{1, 1}}), {proj});
    CHECK(s == FpSubspace::full(2, 2));
    // exhaustive iteration of the same closure
    std::set<FpVector> reach{{0, 0}, {1, 1}};
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<FpVector> cur(reach.begin(), reach.end());
        for (const auto& v : cur) {
            FpVector w{v[0], 0};
            grew |= reach.insert(w).second;
            for (const auto& u : cur) grew |= reach.insert(FpVector{static_cast<std::uint8_t>(u[0] ^ v[0]),
                                                                    static_cast<std::uint8_t>(u[1] ^ v[1])}).second;
        }
    }
    CHECK(reach.size() == 4);
}

TEST_CASE("subspace equality is canonical") {
    auto a = FpSubspace::span(7, 3, {{1, 2, 3}, {0, 1, 4}});
    auto b = FpSubspace::span(7, 3, {{1, 3, 0}, {2, 5, 3}});
    // b's rows are a's rows combined: (1,2,3)+(0,1,4) = (1,3,0), 2(1,2,3)+(0,1,4) = (2,5,3)
    CHECK(a == b);
    CHECK(a.contains(b));
    CHECK(b.contains(a));
}

TEST_CASE("EchelonBuilder insert and reduce") {
    EchelonBuilder e(3, 3);
    FpVector v{2, 1, 0};
    CHECK(e.insert(v));
    FpVector w{1, 2, 0};  // 2 * (2,1,0) = (1,2,0)
    CHECK_FALSE(e.insert(w));
    CHECK(e.dim() == 1);
    CHECK(e.contains(FpVector{1, 2, 0}));
    CHECK_FALSE(e.contains(FpVector{0, 0, 1}));
}
