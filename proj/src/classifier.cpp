#include "lienil/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lienil/algebra_oracle.hpp"
#include "theorem_items.hpp"

// Condition language. Predicates combine atoms with "and", "or" and
// parentheses. Subgroup names are those listed in classifier.hpp, with "p"
// allowed as the exponent in G'^p. Types are "1" or factors joined by "x",
// each "Cn" or "Cn^k" (k copies), with "Cp" for the cyclic group of order p.
//   A=T          A has type T
//   A==B         A equals B
//   A<=B         A is contained in B
//   A~B          A and B are isomorphic
//   |A&B|=N      A intersect B has order N
//   G'in:N:list  G' is one of the small groups S(N,m), m in list ("1,4-6")
//   G'~ref:SPEC  G' is isomorphic to the group built from catalog spec SPEC,
//                "p" standing for the prime

namespace lienil {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(ConditionSet s) { return s == ConditionSet::Literal ? "literal" : "corrected"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "CONSISTENT";
        case Verdict::Inconsistent: return "INCONSISTENT";
        case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

namespace {

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::True;
}

Tri tri_or(Tri a, Tri b) {
    if (a == Tri::True || b == Tri::True) return Tri::True;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::False;
}

Tri tri(std::optional<bool> b) { return b ? (*b ? Tri::True : Tri::False) : Tri::Unknown; }

std::uint64_t type_order(const IsoType& t) {
    if (!t.is_abelian()) return t.order;
    std::uint64_t n = 1;
    for (auto q : t.invariants) n *= q;
    return n;
}

std::uint64_t parse_count(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("expected a number, got '" + s + "'");
    return std::stoull(s);
}

// "C49xC7^2", "Cp^4", "1"
IsoType parse_type(const std::string& text, int p) {
    if (text == "1") return abelian_type({});
    std::vector<std::uint64_t> inv;
    std::stringstream ss(text);
    std::string f;
    while (std::getline(ss, f, 'x')) {
        if (f.size() < 2 || f[0] != 'C') throw std::invalid_argument("bad type factor '" + f + "' in '" + text + "'");
        auto caret = f.find('^');
        std::string base = f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        std::uint64_t q = base == "p" ? static_cast<std::uint64_t>(p) : parse_count(base);
        std::uint64_t k = caret == std::string::npos ? 1 : parse_count(f.substr(caret + 1));
        inv.insert(inv.end(), k, q);
    }
    return abelian_type(inv);
}

// Replaces the exponent p in G'^p by the prime.
std::string canonical_name(const std::string& name, int p) {
    if (name == "G'^p") return "G'^" + std::to_string(p);
    static const std::set<std::string> fixed{"G'", "G''", "Z'", "G'^4g3^2", "g3", "g4", "g5", "g6"};
    bool power = name.size() > 3 && name.compare(0, 3, "G'^") == 0 &&
                 std::all_of(name.begin() + 3, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!power && !fixed.count(name)) throw std::invalid_argument("unknown subgroup name '" + name + "'");
    return name;
}

std::vector<std::uint64_t> parse_id_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dash = part.find('-');
        if (dash == std::string::npos) {
            out.push_back(parse_count(part));
        } else {
            auto lo = parse_count(part.substr(0, dash)), hi = parse_count(part.substr(dash + 1));
            for (auto m = lo; m <= hi; ++m) out.push_back(m);
        }
    }
    return out;
}

std::string id_list_str(const std::vector<SmallGroupId>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + ids[i].str();
    return s;
}

// Fingerprints of reference groups, keyed by resolved spec.
std::optional<IsoType> reference_fingerprint(const std::string& spec, std::uint64_t cap) {
    static std::mutex mu;
    static std::map<std::string, IsoType> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(spec); it != cache.end()) return it->second;
    }
    auto entry = build_from_spec(spec);
    IsoType t = fingerprint(Subgroup::whole(entry.group, cap), cap);
    std::lock_guard lock(mu);
    cache.emplace(spec, t);
    return t;
}

class Evaluator {
public:
    Evaluator(const std::string& text, const StructureProfile& prof, const ClassifierContext& ctx)
        : prof_(prof), ctx_(ctx) {
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) tokens_.push_back(cur);
            cur.clear();
        };
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else if (c == '(' || c == ')') {
                flush();
                tokens_.emplace_back(1, c);
            } else {
                cur += c;
            }
        }
        flush();
    }

    Evaluation run() {
        Evaluation ev;
        ev.value = expr();
        if (pos_ != tokens_.size()) throw std::invalid_argument("trailing input at '" + tokens_[pos_] + "'");
        ev.diagnostics = std::move(diags_);
        return ev;
    }

private:
    const std::string& peek() const {
        static const std::string end;
        return pos_ < tokens_.size() ? tokens_[pos_] : end;
    }

    Tri expr() {
        Tri v = term();
        while (peek() == "or") {
            ++pos_;
            v = tri_or(v, term());
        }
        return v;
    }

    Tri term() {
        Tri v = factor();
        while (peek() == "and") {
            ++pos_;
            v = tri_and(v, factor());
        }
        return v;
    }

    Tri factor() {
        if (pos_ >= tokens_.size()) throw std::invalid_argument("unexpected end of predicate");
        if (peek() == "(") {
            ++pos_;
            Tri v = expr();
            if (peek() != ")") throw std::invalid_argument("missing ')'");
            ++pos_;
            return v;
        }
        return atom(tokens_[pos_++]);
    }

    std::string name(const std::string& s) const { return canonical_name(s, prof_.p); }

    Tri atom(const std::string& a) {
        if (a.rfind("G'in:", 0) == 0) return id_atom(a.substr(5));
        if (a.rfind("G'~ref:", 0) == 0) return ref_atom(a.substr(7));
        if (a.size() > 2 && a[0] == '|') {
            auto bar = a.find('|', 1), amp = a.find('&');
            if (bar == std::string::npos || amp == std::string::npos || amp > bar || a.compare(bar, 2, "|=") != 0)
                throw std::invalid_argument("bad intersection atom '" + a + "'");
            auto n = prof_.meet(name(a.substr(1, amp - 1)), name(a.substr(amp + 1, bar - amp - 1)));
            if (!n) return Tri::Unknown;
            return *n == parse_count(a.substr(bar + 2)) ? Tri::True : Tri::False;
        }
        if (auto k = a.find("=="); k != std::string::npos) {
            auto x = name(a.substr(0, k)), y = name(a.substr(k + 2));
            return tri_and(tri(prof_.contained(x, y)), tri(prof_.contained(y, x)));
        }
        if (auto k = a.find("<="); k != std::string::npos)
            return tri(prof_.contained(name(a.substr(0, k)), name(a.substr(k + 2))));
        if (auto k = a.find('~'); k != std::string::npos) {
            auto x = prof_.type(name(a.substr(0, k))), y = prof_.type(name(a.substr(k + 1)));
            if (!x || !y) return Tri::Unknown;
            return *x == *y ? Tri::True : Tri::False;
        }
        if (auto k = a.find('='); k != std::string::npos) {
            auto x = prof_.type(name(a.substr(0, k)));
            if (!x) return Tri::Unknown;
            return *x == parse_type(a.substr(k + 1), prof_.p) ? Tri::True : Tri::False;
        }
        throw std::invalid_argument("unknown atom '" + a + "'");
    }

    Tri id_atom(const std::string& body) {
        auto colon = body.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad small-group atom '" + body + "'");
        const std::uint64_t order = parse_count(body.substr(0, colon));
        std::vector<SmallGroupId> listed;
        for (auto m : parse_id_list(body.substr(colon + 1))) listed.push_back({order, m});
        auto in_list = [&](const SmallGroupId& id) { return std::find(listed.begin(), listed.end(), id) != listed.end(); };

        auto t = prof_.type("G'");
        if (!t) return Tri::Unknown;
        if (type_order(*t) != order) return Tri::False;
        if (prof_.derived_id) return in_list(*prof_.derived_id) ? Tri::True : Tri::False;
        if (!ctx_.index || !ctx_.index->has_order(order)) {
            diags_.push_back("no small-group data of order " + std::to_string(order) + " to identify G'");
            return Tri::Unknown;
        }
        auto cands = ctx_.index->candidates(*t, order);
        std::vector<SmallGroupId> hit, miss;
        for (const auto& c : cands) (in_list(c) ? hit : miss).push_back(c);
        if (hit.empty()) return Tri::False;
        if (miss.empty() && ctx_.index->complete(order)) return Tri::True;
        if (!miss.empty())
            diags_.push_back("indistinguishable candidates: G' fingerprint matches " + id_list_str(cands) +
                             ", of which only " + id_list_str(hit) + " are listed");
        else
            diags_.push_back("G' fingerprint matches " + id_list_str(hit) + ", but the shipped groups of order " +
                             std::to_string(order) + " are not complete");
        return Tri::Unknown;
    }

    Tri ref_atom(const std::string& tmpl) {
        std::string spec;
        std::stringstream ss(tmpl);
        std::string part;
        while (std::getline(ss, part, ':')) spec += (spec.empty() ? "" : ":") + (part == "p" ? std::to_string(prof_.p) : part);
        auto t = prof_.type("G'");
        if (!t) return Tri::Unknown;
        if (t->is_abelian()) return Tri::False;  // every reference group is non-abelian
        std::optional<IsoType> ref;
        try {
            ref = reference_fingerprint(spec, ctx_.cap);
        } catch (const std::exception& e) {
            diags_.push_back("reference group " + spec + " unavailable: " + e.what());
            return Tri::Unknown;
        }
        if (!(*t == *ref)) return Tri::False;
        // For odd p the reference groups (extraspecial of exponent p times an
        // elementary abelian group) are determined by order, exponent, and
        // the orders of the center and derived subgroup.
        if (prof_.p % 2 == 1) return Tri::True;
        diags_.push_back("G' fingerprint matches reference group " + spec + " at p = 2");
        return Tri::Unknown;
    }

    const StructureProfile& prof_;
    const ClassifierContext& ctx_;
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> diags_;
};

}  // namespace

std::optional<IsoType> StructureProfile::type(const std::string& name) const {
    auto it = types.find(name);
    if (it == types.end()) return std::nullopt;
    return it->second;
}

std::optional<bool> StructureProfile::contained(const std::string& a, const std::string& b) const {
    if (a == b && types.count(a)) return true;
    auto it = containments.find(a + "<=" + b);
    if (it != containments.end()) return it->second;
    // a subgroup cannot lie in a smaller one; the trivial group lies in any
    auto ta = type(a), tb = type(b);
    if (ta && type_order(*ta) == 1) return true;
    if (ta && tb && type_order(*ta) > type_order(*tb)) return false;
    return std::nullopt;
}

std::optional<std::uint64_t> StructureProfile::meet(const std::string& a, const std::string& b) const {
    if (auto it = meets.find(a + "&" + b); it != meets.end()) return it->second;
    if (auto it = meets.find(b + "&" + a); it != meets.end()) return it->second;
    auto ta = type(a), tb = type(b);
    if ((ta && type_order(*ta) == 1) || (tb && type_order(*tb) == 1)) return 1;
    if (contained(a, b).value_or(false) && ta) return type_order(*ta);
    if (contained(b, a).value_or(false) && tb) return type_order(*tb);
    return std::nullopt;
}

StructureProfile StructureProfile::compute(const PcGroupPtr& G, int p, std::uint64_t cap) {
    StructureProfile prof;
    prof.p = p;
    auto lcs = lower_central_series(G, cap);
    auto gamma = [&](std::size_t k) { return k <= lcs.size() ? lcs[k - 1] : Subgroup::trivial(G); };
    const Subgroup D = gamma(2);
    if (p != G->p() && !D.is_trivial())
        throw NotLieNilpotent("G' is a " + std::to_string(G->p()) + "-group, so KG is not Lie nilpotent in characteristic " +
                              std::to_string(p));

    std::vector<std::pair<std::string, Subgroup>> named{{"G'", D}};
    std::set<std::uint64_t> qs{2, 3, 4, 5, 7, static_cast<std::uint64_t>(p)};
    std::vector<std::string> power_names;
    for (auto q : qs) {
        power_names.push_back("G'^" + std::to_string(q));
        named.emplace_back(power_names.back(), power_subgroup(D, q, cap));
    }
    for (std::size_t k = 3; k <= 6; ++k) named.emplace_back("g" + std::to_string(k), gamma(k));
    named.emplace_back("G'^4g3^2", subgroup_product(power_subgroup(D, 4, cap), power_subgroup(gamma(3), 2, cap), cap));
    named.emplace_back("Z'", center(D, cap));
    named.emplace_back("G''", derived_subgroup(D, cap));

    for (const auto& [n, S] : named) prof.types[n] = fingerprint(S, cap);
    for (const auto& [a, A] : named)
        for (const auto& [b, B] : named)
            if (a != b) prof.containments[a + "<=" + b] = B.contains(A);
    for (const auto& pn : power_names) {
        const auto& P = std::find_if(named.begin(), named.end(), [&](const auto& e) { return e.first == pn; })->second;
        for (std::size_t k = 3; k <= 4; ++k) prof.meets[pn + "&g" + std::to_string(k)] = intersection(P, gamma(k)).order();
    }
    prof.derived_exponent = D.exponent();
    return prof;
}

const std::vector<ConditionRecord>& condition_records(ConditionSet set) {
    static const auto build = [](ConditionSet s) {
        std::vector<ConditionRecord> out;
        for (const auto& row : detail::theorem_items()) {
            ConditionRecord r;
            r.id = row.id;
            const bool corrected = s == ConditionSet::Corrected;
            r.gate = corrected && row.corrected_gate ? row.corrected_gate : row.gate;
            r.predicate = corrected && row.corrected_predicate ? row.corrected_predicate : row.predicate;
            r.citation = row.citation;
            r.flagged = row.corrected_gate || row.corrected_predicate;
            r.note = row.note;
            out.push_back(std::move(r));
        }
        return out;
    };
    static const std::vector<ConditionRecord> literal = build(ConditionSet::Literal);
    static const std::vector<ConditionRecord> corrected = build(ConditionSet::Corrected);
    return set == ConditionSet::Literal ? literal : corrected;
}

bool gate_holds(const std::string& gate, int p) {
    if (gate == "any") return true;
    if (gate.rfind("p>=", 0) == 0) return p >= std::stoi(gate.substr(3));
    if (gate.rfind("p=", 0) == 0) return p == std::stoi(gate.substr(2));
    throw std::invalid_argument("bad gate '" + gate + "'");
}

Evaluation evaluate_predicate(const std::string& predicate, const StructureProfile& prof, const ClassifierContext& ctx) {
    return Evaluator(predicate, prof, ctx).run();
}

MatchResult match_conditions(const StructureProfile& prof, ConditionSet set, const ClassifierContext& ctx) {
    MatchResult res;
    for (const auto& rec : condition_records(set)) {
        if (!gate_holds(rec.gate, prof.p)) continue;
        auto ev = evaluate_predicate(rec.predicate, prof, ctx);
        if (ev.value == Tri::True) res.matched.push_back(rec.id);
        if (ev.value == Tri::Unknown) {
            res.undetermined.push_back(rec.id);
            for (auto& d : ev.diagnostics) res.diagnostics.push_back("item " + std::to_string(rec.id) + ": " + d);
        }
    }
    if (res.matched.size() > 1) {
        std::string s = "overlap: items";
        for (auto id : res.matched) s += " " + std::to_string(id);
        s += " all match";
        res.diagnostics.push_back(s);
    }
    return res;
}

TheoremReport verify_theorem(const PcGroupPtr& G, int p, const VerifyOptions& opts, std::string name) {
    TheoremReport r;
    r.group = std::move(name);
    r.p = p;
    r.set = opts.set;
    r.d = d_sequence(G, p, opts.cap);
    r.t_upper = jennings_index(r.d);
    r.target = 10 * static_cast<std::uint64_t>(p) - 8;
    r.profile = StructureProfile::compute(G, p, opts.cap);
    r.match = match_conditions(r.profile, opts.set, ClassifierContext{opts.index, opts.cap});
    if (opts.oracle_cap && G->order() <= opts.oracle_cap) r.oracle_t_upper = t_upper_direct(G, p, opts.oracle_cap);

    const bool at_target = r.t_upper == r.target;
    const bool matched = !r.match.matched.empty();
    const bool unknown = !r.match.undetermined.empty();
    if (r.oracle_t_upper && *r.oracle_t_upper != r.t_upper) {
        r.verdict = Verdict::Inconsistent;
        r.reason = "group-algebra oracle gives t^L = " + std::to_string(*r.oracle_t_upper) + " but Jennings' formula gives " +
                   std::to_string(r.t_upper);
    } else if (at_target == matched) {
        r.verdict = Verdict::Consistent;
        r.reason = at_target ? "t^L = 10p-8 and a condition matches" : "t^L != 10p-8 and no condition matches";
    } else if (unknown) {
        r.verdict = Verdict::Undetermined;
        r.reason = at_target ? "t^L = 10p-8, no condition matches, some conditions are undetermined"
                             : "t^L != 10p-8, no condition matches, some conditions are undetermined";
    } else {
        r.verdict = Verdict::Inconsistent;
        r.reason = at_target ? "t^L = 10p-8 but no condition matches" : "t^L != 10p-8 but conditions match";
    }
    return r;
}

namespace {

nlohmann::ordered_json profile_json(const StructureProfile& prof) {
    nlohmann::ordered_json j;
    j["p"] = prof.p;
    if (prof.derived_id) j["derived_id"] = prof.derived_id->str();
    auto& t = j["types"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : prof.types) t[k] = v.str();
    auto& c = j["containments"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : prof.containments) c[k] = v;
    auto& m = j["intersections"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : prof.meets) m[k] = v;
    if (prof.derived_exponent) j["derived_exponent"] = *prof.derived_exponent;
    return j;
}

}  // namespace

std::string TheoremReport::json() const {
    nlohmann::ordered_json j;
    j["group"] = group;
    j["p"] = p;
    j["conditions"] = to_string(set);
    j["d_sequence"] = nlohmann::ordered_json::object();
    for (const auto& [m, v] : d.d) j["d_sequence"][std::to_string(m)] = v;
    j["t_upper"] = t_upper;
    j["target"] = target;
    j["oracle_t_upper"] = oracle_t_upper ? nlohmann::ordered_json(*oracle_t_upper) : nlohmann::ordered_json(nullptr);
    j["matched"] = match.matched;
    j["undetermined"] = match.undetermined;
    j["diagnostics"] = match.diagnostics;
    j["verdict"] = to_string(verdict);
    j["reason"] = reason;
    j["profile"] = profile_json(profile);
    return j.dump(2);
}

std::string TheoremReport::text() const {
    std::ostringstream os;
    auto ids = [](const std::vector<int>& v) {
        if (v.empty()) return std::string("none");
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
        return s;
    };
    os << "group: " << (group.empty() ? "(unnamed)" : group) << "\n";
    os << "p: " << p << "\n";
    os << "conditions: " << to_string(set) << "\n";
    os << "d-sequence: " << d.str() << "\n";
    os << "t^L (Jennings): " << t_upper << "\n";
    os << "10p-8: " << target << "\n";
    if (oracle_t_upper) os << "t^L (oracle): " << *oracle_t_upper << "\n";
    if (auto t = profile.type("G'")) os << "G': " << t->str() << "\n";
    for (int k = 3; k <= 6; ++k)
        if (auto t = profile.type("g" + std::to_string(k))) os << "gamma_" << k << ": " << t->str() << "\n";
    os << "matched items: " << ids(match.matched) << "\n";
    os << "undetermined items: " << ids(match.undetermined) << "\n";
    for (const auto& d : match.diagnostics) os << "note: " << d << "\n";
    os << "verdict: " << to_string(verdict) << " (" << reason << ")\n";
    return os.str();
}

}  // namespace lienil
