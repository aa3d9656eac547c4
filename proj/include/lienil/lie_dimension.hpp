#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lienil/group_engine.hpp"
#include "lienil/structure.hpp"

namespace lienil {

class NotLieNilpotent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// d_(m) for m >= 2; only nonzero entries are stored.
struct DSequence {
    int p = 0;
    std::map<int, int> d;

    int at(int m) const;
    int total() const;                 // sum of d_(m)
    std::uint64_t weight() const;      // sum over m >= 1 of m * d_(m+1)
    int max_index() const;             // largest m with d_(m) != 0, or 1
    std::string str() const;           // "{d(2)=3, d(8)=1}"
    bool operator==(const DSequence&) const = default;
};

struct LieDimensionChain {
    int p = 0;
    std::vector<Subgroup> terms;  // terms[k] = D_(k+2); the last term is trivial

    const Subgroup& at(int m) const { return terms.at(static_cast<std::size_t>(m - 2)); }
};

// D_(m) = product of gamma_i(G)^{p^j} over i >= 2, j >= 0 with (i-1) p^j >= m-1.
Subgroup lie_dimension_subgroup(const PcGroupPtr& G, int p, int m, std::uint64_t cap = kDefaultCap);
LieDimensionChain lie_dimension_chain(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultCap);
DSequence d_sequence(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultCap);
DSequence d_sequence_of_chain(const LieDimensionChain& chain);
std::uint64_t jennings_index(const DSequence& d);
std::uint64_t upper_index(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultCap);

}  // namespace lienil
