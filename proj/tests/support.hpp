#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "lienil/catalog.hpp"
#include "lienil/group_engine.hpp"
#include "lienil/structure.hpp"

// Brute-force reference computations over the full element list. They use
// only multiplication and inversion, never the structure module.
namespace ref {

using lienil::Element;
using lienil::PcGroupPtr;

inline std::vector<Element> all_elements(const PcGroupPtr& G) {
    std::vector<Element> out;
    for (std::uint64_t c = 0; c < G->order(); ++c) out.push_back(G->decode(c));
    return out;
}

inline std::set<std::uint64_t> codes(const PcGroupPtr& G, const std::vector<Element>& xs) {
    std::set<std::uint64_t> s;
    for (const auto& x : xs) s.insert(G->code(x));
    return s;
}

// Closure by repeated right multiplication until nothing new appears.
inline std::set<std::uint64_t> generated(const PcGroupPtr& G, const std::vector<Element>& gens) {
    std::set<std::uint64_t> s{G->code(G->identity())};
    std::vector<Element> todo{G->identity()};
    while (!todo.empty()) {
        Element x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Element y = G->multiply(x, g);
            if (s.insert(G->code(y)).second) todo.push_back(y);
        }
    }
    return s;
}

inline std::vector<Element> decode_all(const PcGroupPtr& G, const std::set<std::uint64_t>& s) {
    std::vector<Element> out;
    for (auto c : s) out.push_back(G->decode(c));
    return out;
}

inline std::set<std::uint64_t> commutator_group(const PcGroupPtr& G, const std::vector<Element>& A,
                                                const std::vector<Element>& B) {
    std::set<std::uint64_t> values;
    for (const auto& a : A)
        for (const auto& b : B) {
            Element ai = G->inverse(a), bi = G->inverse(b);
            values.insert(G->code(G->multiply(G->multiply(ai, bi), G->multiply(a, b))));
        }
    return generated(G, decode_all(G, values));
}

inline std::vector<std::set<std::uint64_t>> lower_central(const PcGroupPtr& G) {
    auto all = all_elements(G);
    std::vector<std::set<std::uint64_t>> out{codes(G, all)};
    while (out.back().size() > 1) {
        auto next = commutator_group(G, decode_all(G, out.back()), all);
        if (next == out.back()) break;
        out.push_back(next);
    }
    return out;
}

inline std::set<std::uint64_t> centralizer_in(const PcGroupPtr& G, const std::set<std::uint64_t>& H,
                                              const std::set<std::uint64_t>& of) {
    std::set<std::uint64_t> out;
    auto hs = decode_all(G, H);
    auto os = decode_all(G, of);
    for (const auto& h : hs) {
        bool central = true;
        for (const auto& x : os)
            if (!(G->multiply(h, x) == G->multiply(x, h))) {
                central = false;
                break;
            }
        if (central) out.insert(G->code(h));
    }
    return out;
}

inline std::set<std::uint64_t> powers(const PcGroupPtr& G, const std::set<std::uint64_t>& H, long long q) {
    std::vector<Element> gens;
    for (const auto& h : decode_all(G, H)) gens.push_back(G->power(h, q));
    return generated(G, gens);
}

inline std::set<std::uint64_t> as_set(const lienil::Subgroup& H) {
    const auto& c = H.codes();
    return {c.begin(), c.end()};
}

inline std::uint64_t order_of(const PcGroupPtr& G, const Element& x) {
    std::uint64_t n = 1;
    for (Element y = x; !y.is_identity(); y = G->multiply(y, x)) ++n;
    return n;
}

}  // namespace ref
