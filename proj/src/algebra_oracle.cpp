#include "lienil/algebra_oracle.hpp"

#include <algorithm>

#include "lienil/lie_dimension.hpp"
#include "lienil/structure.hpp"

namespace lienil {

GroupAlgebra build_algebra(const PcGroupPtr& G, int p, std::uint64_t cap) {
    if (p < 2 || p > 251 || !is_prime(static_cast<std::uint64_t>(p)))
        throw FieldError("characteristic must be a prime below 256, got " + std::to_string(p));
    if (G->order() > cap)
        throw CapExceeded("group algebra of dimension " + std::to_string(G->order()) + " is above the oracle cap " +
                          std::to_string(cap));
    GroupAlgebra A;
    A.p = p;
    A.G = G;
    A.dim = static_cast<std::size_t>(G->order());
    A.table.resize(A.dim * A.dim);
    std::vector<Element> elems(A.dim);
    for (std::size_t a = 0; a < A.dim; ++a) elems[a] = G->decode(a);
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b)
            A.table[a * A.dim + b] = static_cast<std::uint32_t>(G->code(G->multiply(elems[a], elems[b])));
    for (int i = 0; i < G->ngens(); ++i) A.generators.push_back(static_cast<std::uint32_t>(G->code(G->generator(i))));
    return A;
}

void bracket_with_basis(const GroupAlgebra& A, std::span<const std::uint8_t> v, std::size_t b,
                        std::span<std::uint8_t> out) {
    const int p = A.p;
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t a = 0; a < A.dim; ++a) {
        const int x = v[a];
        if (x == 0) continue;
        auto& r = out[A.mul(a, b)];
        r = static_cast<std::uint8_t>((r + x) % p);
        auto& l = out[A.mul(b, a)];
        l = static_cast<std::uint8_t>((l + p - x) % p);
    }
}

FpSubspace ideal_closure(const GroupAlgebra& A, const FpSubspace& seed, const std::vector<std::uint32_t>& by) {
    std::vector<LinearMap> ops;
    for (auto b : by) {
        ops.push_back([&A, b](std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
            for (std::size_t a = 0; a < A.dim; ++a) out[A.mul(a, b)] = in[a];
        });
        ops.push_back([&A, b](std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
            for (std::size_t a = 0; a < A.dim; ++a) out[A.mul(b, a)] = in[a];
        });
    }
    return close_under(seed, ops);
}

std::vector<std::size_t> LiePowerChain::dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : chain) d.push_back(s.dim());
    return d;
}

namespace {

std::vector<std::uint32_t> nonidentity(const GroupAlgebra& A) {
    std::vector<std::uint32_t> all;
    for (std::size_t b = 1; b < A.dim; ++b) all.push_back(static_cast<std::uint32_t>(b));
    return all;
}

std::size_t step_limit(const GroupAlgebra& A) {
    auto gamma = lower_central_series(A.G, A.dim);
    return static_cast<std::size_t>(gamma.size() > 1 ? gamma[1].order() : 1) + 2;
}

FpSubspace bracket_span(const GroupAlgebra& A, const FpSubspace& V, const std::vector<std::uint32_t>& partners) {
    EchelonBuilder b(A.p, A.dim);
    FpVector out(A.dim);
    for (std::size_t i = 0; i < V.dim() && b.dim() < A.dim; ++i)
        for (auto g : partners) {
            bracket_with_basis(A, V.basis_row(i), g, out);
            b.insert(out);
        }
    return b.to_subspace();
}

void check_descent(const FpSubspace& next, const FpSubspace& cur, std::size_t index) {
    if (!cur.contains(next))
        throw std::logic_error("Lie power chain is not descending at index " + std::to_string(index));
}

}  // namespace

LiePowerChain upper_lie_chain(const GroupAlgebra& A, OracleOptions opts) {
    LiePowerChain r;
    r.kind = LiePowerChain::Kind::Upper;
    const auto partners = opts.reduce_generators ? A.generators : nonidentity(A);
    const std::size_t limit = step_limit(A);
    r.chain.push_back(FpSubspace::full(A.p, A.dim));
    for (;;) {
        const FpSubspace& cur = r.chain.back();
        if (cur.dim() == 0) {
            r.nilpotent = true;
            r.index = r.chain.size();
            break;
        }
        if (r.chain.size() >= limit) {
            r.note = "not Lie nilpotent: no zero term by index " + std::to_string(limit);
            break;
        }
        FpSubspace next = ideal_closure(A, bracket_span(A, cur, partners), partners);
        check_descent(next, cur, r.chain.size() + 1);
        if (next == cur) {
            r.note = "not Lie nilpotent: chain stationary and nonzero at index " + std::to_string(r.chain.size());
            break;
        }
        r.chain.push_back(std::move(next));
    }
    return r;
}

LiePowerChain lower_lie_chain(const GroupAlgebra& A) {
    LiePowerChain r;
    r.kind = LiePowerChain::Kind::Lower;
    const auto all = nonidentity(A);
    const std::size_t limit = step_limit(A);
    FpSubspace V = FpSubspace::full(A.p, A.dim);
    r.chain.push_back(V);
    for (;;) {
        if (r.chain.back().dim() == 0) {
            r.nilpotent = true;
            r.index = r.chain.size();
            break;
        }
        if (r.chain.size() >= limit) {
            r.note = "not Lie nilpotent: no zero term by index " + std::to_string(limit);
            break;
        }
        FpSubspace next_layer = bracket_span(A, V, all);
        if (next_layer == V) {
            r.note = "not Lie nilpotent: commutator layer stationary at index " + std::to_string(r.chain.size());
            break;
        }
        FpSubspace next = ideal_closure(A, next_layer, A.generators);
        check_descent(next, r.chain.back(), r.chain.size() + 1);
        r.chain.push_back(std::move(next));
        V = std::move(next_layer);
    }
    return r;
}

namespace {

std::uint64_t index_or_throw(const LiePowerChain& c) {
    if (!c.nilpotent) throw NotLieNilpotent(c.note);
    return c.index;
}

}  // namespace

std::uint64_t t_upper_direct(const PcGroupPtr& G, int p, std::uint64_t cap) {
    return index_or_throw(upper_lie_chain(build_algebra(G, p, cap)));
}

std::uint64_t t_lower_direct(const PcGroupPtr& G, int p, std::uint64_t cap) {
    return index_or_throw(lower_lie_chain(build_algebra(G, p, cap)));
}

}  // namespace lienil
