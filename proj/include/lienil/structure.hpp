#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lienil/group_engine.hpp"

namespace lienil {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An explicitly enumerated subgroup. The whole group is represented lazily
// and only enumerated when it fits under the cap it was created with.
class Subgroup {
public:
    static Subgroup trivial(PcGroupPtr G);
    static Subgroup whole(PcGroupPtr G, std::uint64_t cap = kDefaultCap);
    // Wraps an element set already known to be closed.
    static Subgroup from_closed(PcGroupPtr G, std::vector<std::uint64_t> codes, std::vector<Element> gens);

    const PcGroupPtr& group_ptr() const;
    const PcPresentation& group() const;
    std::uint64_t order() const;
    bool is_trivial() const { return order() == 1; }
    bool is_whole() const;
    bool enumerated() const;

    // Sorted element codes; throws CapExceeded for an unenumerated whole group.
    const std::vector<std::uint64_t>& codes() const;
    std::vector<Element> elements() const;
    const std::vector<Element>& generators() const;

    bool contains(const Element& x) const;
    bool contains(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const;

    std::uint64_t exponent() const;

private:
    struct Data;
    explicit Subgroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}
    std::shared_ptr<Data> d_;
};

// Abelian groups are described by invariant factors; other groups by a
// fingerprint of cheap invariants.
struct IsoType {
    enum class Kind { Abelian, Fingerprint };
    Kind kind = Kind::Abelian;
    std::vector<std::uint64_t> invariants;  // abelian: non-increasing, product = order

    std::uint64_t order = 1;
    std::uint64_t exponent = 1;
    std::uint64_t center_order = 1;
    std::vector<std::uint64_t> center_invariants;
    std::uint64_t derived_order = 1;
    std::shared_ptr<const IsoType> derived;
    std::vector<std::uint64_t> abelianization;
    std::vector<std::uint64_t> power_orders;  // |H^{p^j}| for j = 1, 2, ... down to 1

    bool is_abelian() const { return kind == Kind::Abelian; }
    // "1", "C9xC3", or "fp(27,3,3,[3],3,[3],[3,3],[1])".
    std::string str() const;
    bool operator==(const IsoType& o) const;
};

IsoType abelian_type(std::vector<std::uint64_t> invariants);
// Parses "1", "C5", "C25xC5", "(C5)^3", "C9x(C3)^2".
IsoType parse_abelian_type(const std::string& text);
std::string format_invariants(const std::vector<std::uint64_t>& inv);

Subgroup closure(const PcGroupPtr& G, const std::vector<Element>& gens, std::uint64_t cap = kDefaultCap);
Subgroup normal_closure(const PcGroupPtr& G, const std::vector<Element>& gens, std::uint64_t cap = kDefaultCap);
Subgroup subgroup_product(const Subgroup& H, const Subgroup& K, std::uint64_t cap = kDefaultCap);
Subgroup intersection(const Subgroup& H, const Subgroup& K);
Subgroup power_subgroup(const Subgroup& H, std::uint64_t q, std::uint64_t cap = kDefaultCap);
std::vector<Subgroup> lower_central_series(const PcGroupPtr& G, std::uint64_t cap = kDefaultCap);
Subgroup derived_subgroup(const Subgroup& H, std::uint64_t cap = kDefaultCap);
Subgroup center(const Subgroup& H, std::uint64_t cap = kDefaultCap);
std::uint64_t exponent(const Subgroup& H);
bool is_abelian(const Subgroup& H);
std::vector<std::uint64_t> abelian_invariants(const Subgroup& H, std::uint64_t cap = kDefaultCap);
IsoType fingerprint(const Subgroup& H, std::uint64_t cap = kDefaultCap);

}  // namespace lienil
