#include "lienil/structure.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace lienil {

struct Subgroup::Data {
    PcGroupPtr G;
    bool whole = false;
    bool enumerated = true;
    std::uint64_t order = 1;
    std::vector<std::uint64_t> codes;
    std::vector<Element> gens;
    mutable std::once_flag exponent_once;
    mutable std::uint64_t exponent = 0;
};

namespace {

// Membership set over element codes: a bitmap for small groups, a hash set
// otherwise.
class CodeSet {
public:
    explicit CodeSet(std::uint64_t universe) {
        if (universe <= (std::uint64_t{1} << 24)) bits_.assign(universe, false);
    }
    bool insert(std::uint64_t c) {
        if (!bits_.empty()) {
            if (bits_[c]) return false;
            bits_[c] = true;
            return true;
        }
        return hash_.insert(c).second;
    }
    bool contains(std::uint64_t c) const { return bits_.empty() ? hash_.count(c) > 0 : bits_[c]; }

private:
    std::vector<bool> bits_;
    std::unordered_set<std::uint64_t> hash_;
};

// Incremental closure under right multiplication by a growing generator list.
class Closure {
public:
    Closure(const PcGroupPtr& G, std::uint64_t cap) : G_(G), seen_(G->order()), cap_(cap) {
        push(G->identity());
    }
    Closure(const Subgroup& H, std::uint64_t cap) : G_(H.group_ptr()), seen_(H.group().order()), cap_(cap) {
        for (auto c : H.codes()) push(G_->decode(c));
        gens_ = H.generators();
    }

    bool contains(const Element& x) const { return seen_.contains(G_->code(x)); }

    // Returns false if g is already in the closure.
    bool add_generator(const Element& g) {
        if (contains(g)) return false;
        gens_.push_back(g);
        const std::size_t old = elems_.size();
        for (std::size_t i = 0; i < old; ++i) push(G_->multiply(elems_[i], g));
        for (std::size_t i = old; i < elems_.size(); ++i)
            for (const auto& h : gens_) push(G_->multiply(elems_[i], h));
        return true;
    }

    const std::vector<Element>& generators() const { return gens_; }
    std::size_t size() const { return elems_.size(); }

    Subgroup finish() && {
        std::vector<std::uint64_t> codes;
        codes.reserve(elems_.size());
        for (const auto& x : elems_) codes.push_back(G_->code(x));
        std::sort(codes.begin(), codes.end());
        return Subgroup::from_closed(G_, std::move(codes), std::move(gens_));
    }

private:
    void push(const Element& x) {
        if (!seen_.insert(G_->code(x))) return;
        if (elems_.size() >= cap_)
            throw CapExceeded("subgroup enumeration exceeded cap of " + std::to_string(cap_) + " elements");
        elems_.push_back(x);
    }

    PcGroupPtr G_;
    CodeSet seen_;
    std::uint64_t cap_;
    std::vector<Element> elems_;
    std::vector<Element> gens_;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

unsigned logp(std::uint64_t n, std::uint64_t p) {
    unsigned k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return k;
}

// Invariant factors of an abelian p-group from o_j = |H^{p^j}|, j = 0, 1, ...
// ending at 1.
std::vector<std::uint64_t> invariants_from_power_orders(std::uint64_t p, const std::vector<std::uint64_t>& o) {
    std::vector<unsigned> r;  // r[j] = number of cyclic factors of order >= p^{j+1}
    for (std::size_t j = 0; j + 1 < o.size(); ++j) r.push_back(logp(o[j] / o[j + 1], p));
    r.push_back(0);
    std::vector<std::uint64_t> inv;
    for (std::size_t j = r.size() - 1; j-- > 0;)
        for (unsigned t = r[j + 1]; t < r[j]; ++t) inv.push_back(ipow(p, static_cast<unsigned>(j + 1)));
    return inv;
}

Subgroup normal_closure_under(const PcGroupPtr& G, const std::vector<Element>& gens,
                              const std::vector<Element>& conjugators, std::uint64_t cap) {
    Closure c(G, cap);
    for (const auto& g : gens) c.add_generator(g);
    for (std::size_t i = 0; i < c.generators().size(); ++i)
        for (const auto& t : conjugators) {
            Element x = G->conjugate(c.generators()[i], t);
            c.add_generator(x);
        }
    return std::move(c).finish();
}

std::vector<Element> pc_generators(const PcPresentation& G) {
    std::vector<Element> g;
    for (int i = 0; i < G.ngens(); ++i) g.push_back(G.generator(i));
    return g;
}

}  // namespace

Subgroup Subgroup::trivial(PcGroupPtr G) {
    auto d = std::make_shared<Data>();
    d->G = std::move(G);
    d->codes = {0};
    d->order = 1;
    d->whole = d->G->order() == 1;
    return Subgroup(d);
}

Subgroup Subgroup::whole(PcGroupPtr G, std::uint64_t cap) {
    auto d = std::make_shared<Data>();
    d->G = std::move(G);
    d->whole = true;
    d->order = d->G->order();
    d->gens = pc_generators(*d->G);
    d->enumerated = d->order <= cap;
    if (d->enumerated) {
        d->codes.resize(d->order);
        std::iota(d->codes.begin(), d->codes.end(), std::uint64_t{0});
    }
    return Subgroup(d);
}

Subgroup Subgroup::from_closed(PcGroupPtr G, std::vector<std::uint64_t> codes, std::vector<Element> gens) {
    auto d = std::make_shared<Data>();
    d->G = std::move(G);
    d->order = codes.size();
    d->whole = d->order == d->G->order();
    d->codes = std::move(codes);
    d->gens = std::move(gens);
    return Subgroup(d);
}

const PcGroupPtr& Subgroup::group_ptr() const { return d_->G; }
const PcPresentation& Subgroup::group() const { return *d_->G; }
std::uint64_t Subgroup::order() const { return d_->order; }
bool Subgroup::is_whole() const { return d_->whole; }
bool Subgroup::enumerated() const { return d_->enumerated; }

const std::vector<std::uint64_t>& Subgroup::codes() const {
    if (!d_->enumerated)
        throw CapExceeded("whole group of order " + std::to_string(d_->order) + " is above the enumeration cap");
    return d_->codes;
}

std::vector<Element> Subgroup::elements() const {
    std::vector<Element> out;
    out.reserve(codes().size());
    for (auto c : codes()) out.push_back(d_->G->decode(c));
    return out;
}

const std::vector<Element>& Subgroup::generators() const { return d_->gens; }

bool Subgroup::contains(const Element& x) const {
    if (d_->whole) return true;
    return std::binary_search(d_->codes.begin(), d_->codes.end(), d_->G->code(x));
}

bool Subgroup::contains(const Subgroup& other) const {
    if (d_->whole) return true;
    if (other.order() > order() || order() % other.order() != 0) return false;
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Subgroup::operator==(const Subgroup& other) const {
    return order() == other.order() && contains(other);
}

std::uint64_t Subgroup::exponent() const {
    std::call_once(d_->exponent_once, [this] {
        std::uint64_t e = 1;
        for (auto c : codes()) e = std::max(e, d_->G->element_order(d_->G->decode(c)));
        d_->exponent = e;
    });
    return d_->exponent;
}

// ---------------------------------------------------------------------------

std::string format_invariants(const std::vector<std::uint64_t>& inv) {
    if (inv.empty()) return "1";
    std::string s;
    for (auto n : inv) {
        if (!s.empty()) s += "x";
        s += "C" + std::to_string(n);
    }
    return s;
}

IsoType abelian_type(std::vector<std::uint64_t> invariants) {
    std::sort(invariants.begin(), invariants.end(), std::greater<>());
    IsoType t;
    t.kind = IsoType::Kind::Abelian;
    t.order = 1;
    for (auto n : invariants) t.order *= n;
    t.exponent = invariants.empty() ? 1 : invariants.front();
    t.invariants = std::move(invariants);
    return t;
}

IsoType parse_abelian_type(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s == "1") return abelian_type({});
    std::vector<std::uint64_t> inv;
    std::uint64_t prime = 0;
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("cannot parse abelian group type '" + text + "'"); };
    auto number = [&] {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail();
        std::uint64_t v = std::stoull(s.substr(i, j - i));
        i = j;
        return v;
    };
    while (i < s.size()) {
        bool paren = s[i] == '(';
        if (paren) ++i;
        if (i >= s.size() || s[i] != 'C') fail();
        ++i;
        std::uint64_t n = number();
        std::uint64_t mult = 1;
        if (paren) {
            if (i >= s.size() || s[i] != ')') fail();
            ++i;
            if (i >= s.size() || s[i] != '^') fail();
            ++i;
            mult = number();
        }
        if (n < 2) fail();
        std::uint64_t q = 2;
        while (n % q) ++q;
        std::uint64_t m = n;
        while (m % q == 0) m /= q;
        if (m != 1 || (prime && q != prime)) fail();  // factors must be powers of one prime
        prime = q;
        for (std::uint64_t k = 0; k < mult; ++k) inv.push_back(n);
        if (i < s.size()) {
            if (s[i] != 'x') fail();
            ++i;
        }
    }
    return abelian_type(std::move(inv));
}

std::string IsoType::str() const {
    if (kind == Kind::Abelian) return format_invariants(invariants);
    auto list = [](const std::vector<std::uint64_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    auto derived_str = [&] {
        if (!derived) return std::string("1");
        if (derived->is_abelian()) return list(derived->invariants);
        return derived->str();
    };
    return "fp(" + std::to_string(order) + "," + std::to_string(exponent) + "," + std::to_string(center_order) + "," +
           list(center_invariants) + "," + std::to_string(derived_order) + "," + derived_str() + "," +
           list(abelianization) + "," + list(power_orders) + ")";
}

bool IsoType::operator==(const IsoType& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Abelian) return invariants == o.invariants;
    if (std::tie(order, exponent, center_order, center_invariants, derived_order, abelianization, power_orders) !=
        std::tie(o.order, o.exponent, o.center_order, o.center_invariants, o.derived_order, o.abelianization,
                 o.power_orders))
        return false;
    if (!derived || !o.derived) return !derived && !o.derived;
    return *derived == *o.derived;
}

// ---------------------------------------------------------------------------

Subgroup closure(const PcGroupPtr& G, const std::vector<Element>& gens, std::uint64_t cap) {
    Closure c(G, cap);
    for (const auto& g : gens) c.add_generator(g);
    return std::move(c).finish();
}

Subgroup normal_closure(const PcGroupPtr& G, const std::vector<Element>& gens, std::uint64_t cap) {
    return normal_closure_under(G, gens, pc_generators(*G), cap);
}

Subgroup subgroup_product(const Subgroup& H, const Subgroup& K, std::uint64_t cap) {
    if (H.contains(K)) return H;
    if (K.contains(H)) return K;
    const Subgroup& big = H.order() >= K.order() ? H : K;
    const Subgroup& small = H.order() >= K.order() ? K : H;
    Closure c(big, cap);
    for (const auto& g : small.generators()) c.add_generator(g);
    return std::move(c).finish();
}

Subgroup intersection(const Subgroup& H, const Subgroup& K) {
    if (H.is_whole()) return K;
    if (K.is_whole()) return H;
    std::vector<std::uint64_t> common;
    std::set_intersection(H.codes().begin(), H.codes().end(), K.codes().begin(), K.codes().end(),
                          std::back_inserter(common));
    // Greedy generating set: take elements not yet generated, in code order.
    const PcGroupPtr& G = H.group_ptr();
    Closure c(G, common.size());
    for (auto code : common) {
        if (c.size() == common.size()) break;
        c.add_generator(G->decode(code));
    }
    return Subgroup::from_closed(G, std::move(common), c.generators());
}

Subgroup power_subgroup(const Subgroup& H, std::uint64_t q, std::uint64_t cap) {
    if (q == 1) return H;
    const PcGroupPtr& G = H.group_ptr();
    std::vector<std::uint64_t> powers;
    for (auto c : H.codes()) powers.push_back(G->code(G->power(G->decode(c), static_cast<long long>(q))));
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    Closure c(G, cap);
    for (auto code : powers) c.add_generator(G->decode(code));
    return std::move(c).finish();
}

std::vector<Subgroup> lower_central_series(const PcGroupPtr& G, std::uint64_t cap) {
    std::vector<Subgroup> series{Subgroup::whole(G, cap)};
    const auto gens = pc_generators(*G);
    while (!series.back().is_trivial()) {
        std::vector<Element> comms;
        for (const auto& x : series.back().generators())
            for (const auto& g : gens) {
                Element c = G->commutator(x, g);
                if (!c.is_identity()) comms.push_back(c);
            }
        Subgroup next = normal_closure(G, comms, cap);
        if (next.order() == series.back().order())
            throw std::logic_error("lower central series is stationary: group is not nilpotent");
        series.push_back(std::move(next));
    }
    return series;
}

Subgroup derived_subgroup(const Subgroup& H, std::uint64_t cap) {
    const PcGroupPtr& G = H.group_ptr();
    const auto& gens = H.generators();
    std::vector<Element> comms;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Element c = G->commutator(gens[i], gens[j]);
            if (!c.is_identity()) comms.push_back(c);
        }
    return normal_closure_under(G, comms, gens, cap);
}

Subgroup center(const Subgroup& H, std::uint64_t cap) {
    if (H.order() > cap)
        throw CapExceeded("center of a subgroup of order " + std::to_string(H.order()) + " is above the cap");
    const PcGroupPtr& G = H.group_ptr();
    const auto& gens = H.generators();
    std::vector<std::uint64_t> codes;
    std::vector<Element> central;
    for (auto c : H.codes()) {
        Element x = G->decode(c);
        bool ok = true;
        for (const auto& g : gens)
            if (!(G->multiply(x, g) == G->multiply(g, x))) {
                ok = false;
                break;
            }
        if (ok) {
            codes.push_back(c);
            central.push_back(x);
        }
    }
    Closure gen(G, codes.size());
    for (const auto& x : central) {
        if (gen.size() == codes.size()) break;
        gen.add_generator(x);
    }
    return Subgroup::from_closed(G, std::move(codes), gen.generators());
}

std::uint64_t exponent(const Subgroup& H) { return H.exponent(); }

bool is_abelian(const Subgroup& H) {
    const auto& G = H.group();
    const auto& gens = H.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(G.multiply(gens[i], gens[j]) == G.multiply(gens[j], gens[i]))) return false;
    return true;
}

std::vector<std::uint64_t> abelian_invariants(const Subgroup& H, std::uint64_t cap) {
    if (!is_abelian(H)) throw std::invalid_argument("abelian_invariants: subgroup is not abelian");
    const auto p = static_cast<std::uint64_t>(H.group().p());
    std::vector<std::uint64_t> orders{H.order()};
    Subgroup cur = H;
    while (!cur.is_trivial()) {
        cur = power_subgroup(cur, p, cap);
        orders.push_back(cur.order());
    }
    return invariants_from_power_orders(p, orders);
}

IsoType fingerprint(const Subgroup& H, std::uint64_t cap) {
    if (is_abelian(H)) return abelian_type(abelian_invariants(H, cap));
    const auto p = static_cast<std::uint64_t>(H.group().p());
    IsoType t;
    t.kind = IsoType::Kind::Fingerprint;
    t.order = H.order();
    t.exponent = H.exponent();
    Subgroup Z = center(H, cap);
    t.center_order = Z.order();
    t.center_invariants = abelian_invariants(Z, cap);
    Subgroup D = derived_subgroup(H, cap);
    t.derived_order = D.order();
    t.derived = std::make_shared<const IsoType>(fingerprint(D, cap));
    std::vector<std::uint64_t> quotient_orders;
    std::uint64_t q = 1;
    for (;;) {
        Subgroup P = power_subgroup(H, q, cap);
        if (q > 1) t.power_orders.push_back(P.order());
        Subgroup PD = subgroup_product(P, D, cap);
        quotient_orders.push_back(PD.order() / D.order());
        if (P.is_trivial()) break;
        q *= p;
    }
    while (quotient_orders.size() > 1 && quotient_orders[quotient_orders.size() - 2] == 1) quotient_orders.pop_back();
    t.abelianization = invariants_from_power_orders(p, quotient_orders);
    return t;
}

}  // namespace lienil
