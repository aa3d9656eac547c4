#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lienil/catalog.hpp"
#include "lienil/group_engine.hpp"
#include "lienil/lie_dimension.hpp"
#include "lienil/structure.hpp"

namespace lienil {

enum class Tri { False, True, Unknown };

std::string to_string(Tri t);

// Structural facts about G and G' = gamma_2(G). Subgroups are named
//   G'        the derived subgroup
//   G'^q      the subgroup generated by q-th powers of G'
//   g3..g6    gamma_k(G)
//   G'^4g3^2  the product G'^4 gamma_3(G)^2
//   Z'        the center of G'
//   G''       the derived subgroup of G'
// Facts left out of a profile evaluate to Unknown.
struct StructureProfile {
    int p = 0;
    std::optional<SmallGroupId> derived_id;     // declared small-group ID of G'
    std::map<std::string, IsoType> types;       // name -> isomorphism type
    std::map<std::string, bool> containments;   // "A<=B" -> A is contained in B
    std::map<std::string, std::uint64_t> meets; // "A&B" -> |A intersect B|
    std::optional<std::uint64_t> derived_exponent;

    static StructureProfile compute(const PcGroupPtr& G, int p, std::uint64_t cap = kDefaultCap);

    std::optional<IsoType> type(const std::string& name) const;
    std::optional<bool> contained(const std::string& a, const std::string& b) const;
    std::optional<std::uint64_t> meet(const std::string& a, const std::string& b) const;

    void set_type(const std::string& name, const IsoType& t) { types[name] = t; }
    void set_contained(const std::string& a, const std::string& b, bool v) { containments[a + "<=" + b] = v; }
    void set_meet(const std::string& a, const std::string& b, std::uint64_t n) { meets[a + "&" + b] = n; }
};

enum class ConditionSet { Literal, Corrected };

std::string to_string(ConditionSet s);

struct ConditionRecord {
    int id = 0;
    std::string gate;       // "p=7", "p>=5", "any"
    std::string predicate;  // condition language, see classifier.cpp
    std::string citation;   // the item text
    bool flagged = false;   // the literal and corrected readings differ
    std::string note;       // why the item is flagged
};

// The theorem items under the chosen reading, ids 1..108.
const std::vector<ConditionRecord>& condition_records(ConditionSet set);

struct ClassifierContext {
    const FingerprintIndex* index = nullptr;  // identifies G' against small-group IDs
    std::uint64_t cap = kDefaultCap;
};

struct Evaluation {
    Tri value = Tri::Unknown;
    std::vector<std::string> diagnostics;
};

bool gate_holds(const std::string& gate, int p);
Evaluation evaluate_predicate(const std::string& predicate, const StructureProfile& prof, const ClassifierContext& ctx);

struct MatchResult {
    std::vector<int> matched;
    std::vector<int> undetermined;
    std::vector<std::string> diagnostics;
};

MatchResult match_conditions(const StructureProfile& prof, ConditionSet set = ConditionSet::Literal,
                             const ClassifierContext& ctx = {});

enum class Verdict { Consistent, Inconsistent, Undetermined };

std::string to_string(Verdict v);

struct VerifyOptions {
    ConditionSet set = ConditionSet::Literal;
    std::uint64_t cap = kDefaultCap;
    std::uint64_t oracle_cap = 0;  // 0 skips the group-algebra oracle
    const FingerprintIndex* index = nullptr;
};

struct TheoremReport {
    std::string group;
    int p = 0;
    ConditionSet set = ConditionSet::Literal;
    DSequence d;
    std::uint64_t t_upper = 0;
    std::uint64_t target = 0;  // 10p - 8
    std::optional<std::uint64_t> oracle_t_upper;
    StructureProfile profile;
    MatchResult match;
    Verdict verdict = Verdict::Consistent;
    std::string reason;

    std::string text() const;
    std::string json() const;
};

TheoremReport verify_theorem(const PcGroupPtr& G, int p, const VerifyOptions& opts = {}, std::string name = "");

}  // namespace lienil
