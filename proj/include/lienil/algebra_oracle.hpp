#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lienil/fp_linalg.hpp"
#include "lienil/group_engine.hpp"

namespace lienil {

inline constexpr std::uint64_t kDefaultOracleCap = 256;

// F_p[G] with basis the group elements in code order.
struct GroupAlgebra {
    int p = 0;
    PcGroupPtr G;
    std::size_t dim = 0;
    std::vector<std::uint32_t> table;        // table[a * dim + b] = index of g_a g_b
    std::vector<std::uint32_t> generators;   // indices of the pc generators

    std::uint32_t mul(std::size_t a, std::size_t b) const { return table[a * dim + b]; }
};

GroupAlgebra build_algebra(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultOracleCap);

// Lie bracket [v, g_b] = v g_b - g_b v of an algebra element with a basis element.
void bracket_with_basis(const GroupAlgebra& A, std::span<const std::uint8_t> v, std::size_t b,
                        std::span<std::uint8_t> out);
// Ideal generated by a subspace, closed under left and right multiplication
// by the given basis elements.
FpSubspace ideal_closure(const GroupAlgebra& A, const FpSubspace& seed, const std::vector<std::uint32_t>& by);

struct LiePowerChain {
    enum class Kind { Upper, Lower };
    Kind kind = Kind::Upper;
    std::vector<FpSubspace> chain;  // chain[k] is the power of index k + 1
    bool nilpotent = false;
    std::size_t index = 0;          // least n with power n = 0, when nilpotent
    std::string note;

    std::vector<std::size_t> dims() const;
};

struct OracleOptions {
    // Use only the pc generators as bracket partners and ideal multipliers in
    // the upper chain. Turning this off uses every group element.
    bool reduce_generators = true;
};

LiePowerChain upper_lie_chain(const GroupAlgebra& A, OracleOptions opts = {});
LiePowerChain lower_lie_chain(const GroupAlgebra& A);

std::uint64_t t_upper_direct(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultOracleCap);
std::uint64_t t_lower_direct(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultOracleCap);

}  // namespace lienil
