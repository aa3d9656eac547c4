#include "lienil/lie_dimension.hpp"

#include <map>

#include "lienil/fp_linalg.hpp"

namespace lienil {

int DSequence::at(int m) const {
    auto it = d.find(m);
    return it == d.end() ? 0 : it->second;
}

int DSequence::total() const {
    int s = 0;
    for (const auto& [m, v] : d) s += v;
    return s;
}

std::uint64_t DSequence::weight() const {
    std::uint64_t w = 0;
    for (const auto& [m, v] : d) w += static_cast<std::uint64_t>(m - 1) * static_cast<std::uint64_t>(v);
    return w;
}

int DSequence::max_index() const { return d.empty() ? 1 : d.rbegin()->first; }

std::string DSequence::str() const {
    std::string s = "{";
    for (const auto& [m, v] : d) {
        if (s.size() > 1) s += ", ";
        s += "d(" + std::to_string(m) + ")=" + std::to_string(v);
    }
    return s + "}";
}

namespace {

// gamma_i(G) and their p-power subgroups, computed once per group.
class PowerCache {
public:
    PowerCache(const PcGroupPtr& G, int p, std::uint64_t cap) : p_(p), cap_(cap) {
        if (p != G->p()) {
            // K of characteristic p and G a q-group: KG is Lie nilpotent only
            // when G is abelian.
            auto gamma = lower_central_series(G, cap);
            if (gamma.size() > 2)
                throw NotLieNilpotent("KG not Lie nilpotent: G' is a nontrivial " + std::to_string(G->p()) +
                                      "-group and char K = " + std::to_string(p));
            gamma_ = {gamma.front(), gamma.back()};
            return;
        }
        gamma_ = lower_central_series(G, cap);
    }

    bool trivial_derived() const { return gamma_.size() <= 2; }
    // Index i >= 1; returns nullptr once gamma_i is trivial.
    const Subgroup* gamma(int i) const {
        return static_cast<std::size_t>(i) <= gamma_.size() ? &gamma_[static_cast<std::size_t>(i - 1)] : nullptr;
    }
    int last_nontrivial() const { return static_cast<int>(gamma_.size()) - 1; }

    const Subgroup& power(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const Subgroup& base = j == 0 ? *gamma(i) : power(i, j - 1);
        Subgroup r = j == 0 ? base : power_subgroup(base, static_cast<std::uint64_t>(p_), cap_);
        return cache_.emplace(key, std::move(r)).first->second;
    }

    Subgroup dimension_subgroup(int m, const PcGroupPtr& G) {
        Subgroup acc = Subgroup::trivial(G);
        for (int i = 2; i <= last_nontrivial(); ++i) {
            // Minimal j with (i-1) p^j >= m-1; larger j give smaller subgroups.
            int j = 0;
            std::uint64_t lhs = static_cast<std::uint64_t>(i - 1);
            while (lhs < static_cast<std::uint64_t>(m - 1)) {
                lhs *= static_cast<std::uint64_t>(p_);
                ++j;
            }
            const Subgroup& term = power(i, j);
            if (!term.is_trivial()) acc = subgroup_product(acc, term, cap_);
        }
        return acc;
    }

private:
    int p_;
    std::uint64_t cap_;
    std::vector<Subgroup> gamma_;
    std::map<std::pair<int, int>, Subgroup> cache_;
};

void check_p(int p) {
    if (p < 2 || p > 251 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("characteristic must be a prime below 256, got " + std::to_string(p));
}

}  // namespace

Subgroup lie_dimension_subgroup(const PcGroupPtr& G, int p, int m, std::uint64_t cap) {
    check_p(p);
    if (m < 2) throw std::invalid_argument("Lie dimension subgroups are indexed from m = 2");
    PowerCache cache(G, p, cap);
    return cache.dimension_subgroup(m, G);
}

LieDimensionChain lie_dimension_chain(const PcGroupPtr& G, int p, std::uint64_t cap) {
    check_p(p);
    PowerCache cache(G, p, cap);
    LieDimensionChain chain;
    chain.p = p;
    for (int m = 2;; ++m) {
        chain.terms.push_back(cache.dimension_subgroup(m, G));
        if (chain.terms.back().is_trivial()) break;
    }
    for (std::size_t k = 1; k < chain.terms.size(); ++k)
        if (!chain.terms[k - 1].contains(chain.terms[k]))
            throw std::logic_error("Lie dimension chain is not descending at m = " + std::to_string(k + 2));
    return chain;
}

DSequence d_sequence_of_chain(const LieDimensionChain& chain) {
    DSequence d;
    d.p = chain.p;
    const auto p = static_cast<std::uint64_t>(chain.p);
    for (std::size_t k = 0; k + 1 < chain.terms.size(); ++k) {
        std::uint64_t a = chain.terms[k].order(), b = chain.terms[k + 1].order();
        if (b == 0 || a % b != 0) throw std::logic_error("Lie dimension index is not an integer");
        std::uint64_t r = a / b;
        int e = 0;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) throw std::logic_error("Lie dimension index is not a power of p");
        if (e > 0) d.d[static_cast<int>(k) + 2] = e;
    }
    return d;
}

DSequence d_sequence(const PcGroupPtr& G, int p, std::uint64_t cap) {
    return d_sequence_of_chain(lie_dimension_chain(G, p, cap));
}

std::uint64_t jennings_index(const DSequence& d) {
    return 2 + static_cast<std::uint64_t>(d.p - 1) * d.weight();
}

std::uint64_t upper_index(const PcGroupPtr& G, int p, std::uint64_t cap) {
    return jennings_index(d_sequence(G, p, cap));
}

}  // namespace lienil
