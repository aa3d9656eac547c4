#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lienil {

inline constexpr int kMaxGens = 32;

// Exponent vector over the pc generators g1..gn. Entries past ngens are zero.
struct Element {
    std::array<std::uint8_t, kMaxGens> e{};

    std::uint8_t operator[](std::size_t i) const { return e[i]; }
    std::uint8_t& operator[](std::size_t i) { return e[i]; }
    bool operator==(const Element&) const = default;
    bool is_identity() const;
};

struct SmallGroupId {
    std::uint64_t order = 0;
    std::uint64_t number = 0;
    bool operator==(const SmallGroupId&) const = default;
    auto operator<=>(const SmallGroupId&) const = default;
    std::string str() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    int line_, column_;
    std::string detail_;
};

class InconsistentPresentation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relations as given, before the collector tables are built.
struct PresentationData {
    int p = 0;
    int ngens = 0;
    std::vector<Element> power;                 // power[i] = g_{i+1}^p
    std::vector<std::vector<Element>> comm;     // comm[j][i] = [g_{j+1}, g_{i+1}], j > i
    std::optional<SmallGroupId> id;
    std::vector<std::pair<std::string, std::string>> expect;
    std::vector<std::string> comments;
};

class PcPresentation;
using PcGroupPtr = std::shared_ptr<const PcPresentation>;

// A consistent power-commutator presentation with relative orders p.
// Commutator convention [x,y] = x^-1 y^-1 x y, so g_j g_i = g_i g_j [g_j,g_i].
class PcPresentation {
public:
    // Validates supports, builds the collector and runs the consistency test.
    static PcGroupPtr create(PresentationData data);

    int p() const { return data_.p; }
    int ngens() const { return data_.ngens; }
    std::uint64_t order() const { return order_; }
    const PresentationData& data() const { return data_; }
    const Element& power_relation(int i) const { return data_.power[i]; }
    const Element& commutator_relation(int j, int i) const { return data_.comm[j][i]; }
    const std::optional<SmallGroupId>& declared_id() const { return data_.id; }

    Element identity() const { return Element{}; }
    Element generator(int i) const;

    Element multiply(const Element& x, const Element& y) const;
    Element inverse(const Element& x) const;
    Element power(const Element& x, long long n) const;
    Element commutator(const Element& x, const Element& y) const;
    Element conjugate(const Element& x, const Element& g) const;  // g^-1 x g
    std::uint64_t element_order(const Element& x) const;

    std::uint64_t code(const Element& x) const;
    Element decode(std::uint64_t c) const;
    bool valid(const Element& x) const;

    std::string format(const Element& x) const;  // "(e1,...,en)"
    std::string word(const Element& x) const;    // "g1^e1 g3^e3" or "1"

private:
    explicit PcPresentation(PresentationData data);
    void build_tables();
    void check_consistency() const;
    Element mul_from(const Element& x, const Element& y, int from) const;
    Element conj_tail(const Element& s, int i, int times) const;

    PresentationData data_;
    std::uint64_t order_ = 1;
    std::vector<std::uint64_t> radix_;
    // conj_pow_[(i * n + k) * p + t] = (g_k^{g_i})^t for k > i.
    std::vector<Element> conj_pow_;
    std::vector<bool> commutes_with_tail_;
};

PresentationData parse_presentation_data(const std::string& text);
PcGroupPtr parse_presentation(const std::string& text);
std::string format_presentation(const PresentationData& data);

Element multiply(const PcPresentation& G, const Element& x, const Element& y);
Element inverse(const PcPresentation& G, const Element& x);
Element power(const PcPresentation& G, const Element& x, long long n);
Element commutator(const PcPresentation& G, const Element& x, const Element& y);
std::uint64_t element_order(const PcPresentation& G, const Element& x);

}  // namespace lienil
