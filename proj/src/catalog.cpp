#include "lienil/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "lienil/fp_linalg.hpp"

#ifndef LIENIL_SOURCE_DATA_DIR
#define LIENIL_SOURCE_DATA_DIR "data"
#endif

namespace lienil {

std::string to_string(SourceKind k) {
    switch (k) {
        case SourceKind::Builder: return "builder";
        case SourceKind::ItemPresentation: return "item-presentation";
        case SourceKind::Imported: return "imported";
    }
    return "unknown";
}

namespace {

PresentationData blank(int p, int n) {
    PresentationData d;
    d.p = p;
    d.ngens = n;
    d.power.assign(static_cast<std::size_t>(n), Element{});
    d.comm.assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
    return d;
}

// Exponent of p in n, or -1 if n is not a power of p.
int p_log(std::uint64_t n, int p) {
    if (n == 0) return -1;
    int e = 0;
    while (n % static_cast<std::uint64_t>(p) == 0) {
        n /= static_cast<std::uint64_t>(p);
        ++e;
    }
    return n == 1 ? e : -1;
}

void require_prime(int p) {
    if (p < 2 || p > 251 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("not a prime below 256: " + std::to_string(p));
}

CatalogEntry make_entry(std::string name, SourceKind src, std::string origin, PresentationData d) {
    CatalogEntry e;
    e.name = std::move(name);
    e.source = src;
    e.origin = std::move(origin);
    e.id = d.id;
    e.expected = d.expect;
    e.group = PcPresentation::create(std::move(d));
    return e;
}

// r^m in the chain g_first, g_first+1, ... where g_first+k = r^(2^k), for a
// cyclic 2-group of order 2^len.
Element cyclic_power(int first, int len, std::uint64_t m) {
    Element x;
    m %= (std::uint64_t{1} << len);
    for (int k = 0; k < len; ++k)
        if (m >> k & 1) x[static_cast<std::size_t>(first + k)] = 1;
    return x;
}

// Shared pc presentation of dihedral and generalized quaternion 2-groups:
// g1 = s, g2 = r, g_{k+1} = g_k^2, and s^-1 r s = r^-1.
PresentationData dihedral_like(std::uint64_t order, bool quaternion) {
    const int n = p_log(order, 2);
    const int len = n - 1;  // r has order 2^len
    auto d = blank(2, n);
    if (quaternion) d.power[0] = cyclic_power(1, len, std::uint64_t{1} << (len - 1));
    for (int k = 1; k + 1 < n; ++k) d.power[k][static_cast<std::size_t>(k + 1)] = 1;
    const std::uint64_t mod = std::uint64_t{1} << len;
    for (int k = 1; k < n; ++k) {
        // [r^a, s] = r^-a (r^a)^s = r^-2a
        const std::uint64_t a = std::uint64_t{1} << (k - 1);
        d.comm[k][0] = cyclic_power(1, len, (mod - (2 * a) % mod) % mod);
    }
    return d;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::uint64_t to_u64(const std::string& s, const std::string& spec) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad number '" + s + "' in builder spec '" + spec + "'");
    return v;
}

std::string join_factors(const std::vector<std::uint64_t>& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s;
}

}  // namespace

CatalogEntry build_abelian(int p, const std::vector<std::uint64_t>& invariant_factors) {
    require_prime(p);
    std::vector<std::uint64_t> f = invariant_factors;
    std::sort(f.begin(), f.end(), std::greater<>());
    int n = 0;
    for (auto q : f) {
        int e = p_log(q, p);
        if (e < 1) throw std::invalid_argument("invariant factor " + std::to_string(q) + " is not a power of " +
                                               std::to_string(p) + " above 1");
        n += e;
    }
    auto d = blank(p, n);
    int g = 0;
    for (auto q : f) {
        int e = p_log(q, p);
        for (int k = 0; k + 1 < e; ++k) d.power[g + k][static_cast<std::size_t>(g + k + 1)] = 1;
        g += e;
    }
    std::string spec = "abelian:" + std::to_string(p) + ":" + join_factors(f);
    return make_entry(spec, SourceKind::Builder, spec, std::move(d));
}

CatalogEntry build_dihedral(std::uint64_t order) {
    if (p_log(order, 2) < 2) throw std::invalid_argument("dihedral order must be a power of 2, at least 4");
    std::string spec = "dihedral:" + std::to_string(order);
    return make_entry(spec, SourceKind::Builder, spec, dihedral_like(order, false));
}

CatalogEntry build_quaternion(std::uint64_t order) {
    if (p_log(order, 2) < 3) throw std::invalid_argument("quaternion order must be a power of 2, at least 8");
    std::string spec = "quaternion:" + std::to_string(order);
    return make_entry(spec, SourceKind::Builder, spec, dihedral_like(order, true));
}

CatalogEntry build_heisenberg(int p) {
    require_prime(p);
    auto d = blank(p, 3);
    d.comm[1][0][2] = 1;
    std::string spec = "heisenberg:" + std::to_string(p);
    return make_entry(spec, SourceKind::Builder, spec, std::move(d));
}

CatalogEntry build_free_class2(int p, int rank) {
    require_prime(p);
    if (rank < 1 || rank > 5) throw std::invalid_argument("free_class2 rank must be between 1 and 5");
    const int n = rank + rank * (rank - 1) / 2;
    auto d = blank(p, n);
    int c = rank;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) d.comm[j][i][static_cast<std::size_t>(c++)] = 1;
    std::string spec = "free_class2:" + std::to_string(p) + ":" + std::to_string(rank);
    auto e = make_entry(spec, SourceKind::Builder, spec, std::move(d));
    if (rank == 5) e.witness_item = 91;
    return e;
}

CatalogEntry build_item_presentation(int item, int p, int keep) {
    require_prime(p);
    int n = 0;
    std::vector<std::tuple<int, int, int>> rels;  // [g_j, g_i] = g_k, 0-based
    switch (item) {
        case 46:  // <a,b,c,d,e>, [b,a] = e
            n = 5;
            rels = {{1, 0, 4}};
            break;
        case 66:  // <a,...,g>, [b,a] = c
            n = 7;
            rels = {{1, 0, 2}};
            break;
        case 67:  // <a,...,g>, [b,a] = e, [d,c] = e
            n = 7;
            rels = {{1, 0, 4}, {3, 2, 4}};
            break;
        default:
            throw std::invalid_argument("no presentation is written out in theorem item " + std::to_string(item));
    }
    if (keep <= 0 || keep > n) keep = n;
    auto d = blank(p, keep);
    for (auto [j, i, k] : rels)
        if (j < keep && k < keep) d.comm[j][i][static_cast<std::size_t>(k)] = 1;
    std::string spec = "item" + std::to_string(item) + ":" + std::to_string(p);
    if (keep != n) spec += ":" + std::to_string(keep);
    return make_entry(spec, SourceKind::ItemPresentation, "theorem item " + std::to_string(item), std::move(d));
}

CatalogEntry build_item1_witness() {
    // a, b, c, u, v, w, z at p = 7: a^7 = v, b^7 = w, u^7 = z, [b,a] = u, [c,a] = v,
    // [c,b] = w, [u,c] = z^5, [v,b] = z^6, [w,a] = z. G' = <u,v,w> = C49xC7xC7, gamma_3 = <z> = G'^7.
    auto d = blank(7, 7);
    d.power[0][4] = 1;
    d.power[1][5] = 1;
    d.power[3][6] = 1;
    d.comm[1][0][3] = 1;
    d.comm[2][0][4] = 1;
    d.comm[2][1][5] = 1;
    d.comm[3][2][6] = 5;
    d.comm[4][1][6] = 6;
    d.comm[5][0][6] = 1;
    auto e = make_entry("item1_witness", SourceKind::Builder, "item1_witness", std::move(d));
    e.witness_item = 1;
    return e;
}

CatalogEntry build_from_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.empty()) throw std::invalid_argument("empty builder spec");
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i) {
        if (i >= parts.size()) throw std::invalid_argument("missing parameter in builder spec '" + spec + "'");
        return to_u64(parts[i], spec);
    };
    auto nparams = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi)
            throw std::invalid_argument("wrong number of parameters in builder spec '" + spec + "'");
    };
    if (kind == "abelian") {
        nparams(2, 2);
        std::vector<std::uint64_t> f;
        if (!parts[2].empty())
            for (const auto& s : split(parts[2], ',')) f.push_back(to_u64(s, spec));
        return build_abelian(static_cast<int>(arg(1)), f);
    }
    if (kind == "item1_witness") return nparams(0, 0), build_item1_witness();
    if (kind == "dihedral") return nparams(1, 1), build_dihedral(arg(1));
    if (kind == "quaternion") return nparams(1, 1), build_quaternion(arg(1));
    if (kind == "heisenberg") return nparams(1, 1), build_heisenberg(static_cast<int>(arg(1)));
    if (kind == "free_class2") return nparams(2, 2), build_free_class2(static_cast<int>(arg(1)), static_cast<int>(arg(2)));
    if (kind == "item46" || kind == "item66" || kind == "item67") {
        nparams(1, 2);
        int keep = parts.size() > 2 ? static_cast<int>(arg(2)) : 0;
        return build_item_presentation(std::stoi(kind.substr(4)), static_cast<int>(arg(1)), keep);
    }
    throw std::invalid_argument("unknown builder '" + kind + "'");
}

CatalogEntry entry_from_text(const std::string& text, const std::string& name) {
    PresentationData d = parse_presentation_data(text);
    std::string nm = d.id ? d.id->str() : name;
    if (d.id) {
        std::uint64_t order = 1;
        for (int i = 0; i < d.ngens; ++i) order *= static_cast<std::uint64_t>(d.p);
        if (order != d.id->order)
            throw std::invalid_argument(name + ": declared order " + std::to_string(d.id->order) +
                                        " differs from p^n = " + std::to_string(order));
    }
    return make_entry(nm, SourceKind::Imported, name, std::move(d));
}

CatalogEntry import_presentation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return entry_from_text(ss.str(), path.string());
}

std::vector<CatalogEntry> builtin_catalog(std::uint64_t max_order) {
    std::vector<std::string> specs;
    for (int n : {8, 16, 32, 64}) specs.push_back("dihedral:" + std::to_string(n));
    for (int n : {8, 16, 32}) specs.push_back("quaternion:" + std::to_string(n));
    for (int p : {3, 5, 7}) specs.push_back("heisenberg:" + std::to_string(p));
    // Every abelian p-group of order at most 64 for p = 2, 3, 5, 7.
    for (int p : {2, 3, 5, 7}) {
        std::vector<std::vector<std::uint64_t>> parts;
        std::vector<std::uint64_t> cur;
        auto rec = [&](auto&& self, int remaining, int maxpart, std::uint64_t order) -> void {
            if (remaining == 0) {
                if (!cur.empty()) parts.push_back(cur);
                return;
            }
            std::uint64_t q = 1;
            for (int e = 1; e <= std::min(remaining, maxpart); ++e) {
                q *= static_cast<std::uint64_t>(p);
                if (order * q > 64) break;
                cur.push_back(q);
                // remaining parts must not exceed this one
                self(self, remaining - e, e, order * q);
                cur.pop_back();
            }
        };
        for (int total = 1; total <= 6; ++total) rec(rec, total, total, 1);
        for (const auto& f : parts) specs.push_back("abelian:" + std::to_string(p) + ":" + join_factors(f));
    }
    for (const char* s : {"free_class2:2:3", "free_class2:3:3", "free_class2:2:4", "free_class2:2:5",
                          "free_class2:3:5", "item46:3", "item46:5", "item66:3:5", "item67:3:5", "item66:3",
                          "item67:3", "item66:5", "item67:5", "item1_witness"})
        specs.push_back(s);
    std::vector<CatalogEntry> out;
    for (const auto& s : specs) {
        auto e = build_from_spec(s);
        if (e.group->order() <= max_order) out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> imported_catalog(const std::filesystem::path& dir, std::uint64_t max_order) {
    std::vector<CatalogEntry> out;
    if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("no such directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".pc") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        auto e = import_presentation(f);
        if (e.group->order() <= max_order) out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        auto ka = a.id.value_or(SmallGroupId{a.group->order(), 0});
        auto kb = b.id.value_or(SmallGroupId{b.group->order(), 0});
        return ka < kb;
    });
    return out;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("LIENIL_DATA_DIR"); env && *env) return env;
    return LIENIL_SOURCE_DATA_DIR;
}

// ---------------------------------------------------------------------------

bool TableRowReport::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

bool TableReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass(); });
}

std::size_t TableReport::passed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass(); }));
}

TableRowReport verify_table_row(const CatalogEntry& entry, std::uint64_t cap) {
    TableRowReport row;
    row.name = entry.name;
    const auto& G = entry.group;
    const std::string ps = std::to_string(G->p());
    Subgroup H = Subgroup::whole(G, cap);
    std::optional<Subgroup> P, Z, D;
    auto pw = [&]() -> const Subgroup& {
        if (!P) P = power_subgroup(H, static_cast<std::uint64_t>(G->p()), cap);
        return *P;
    };
    auto zeta = [&]() -> const Subgroup& {
        if (!Z) Z = center(H, cap);
        return *Z;
    };
    auto der = [&]() -> const Subgroup& {
        if (!D) D = derived_subgroup(H, cap);
        return *D;
    };
    for (const auto& [key, value] : entry.expected) {
        TableCheck c;
        c.key = key;
        c.expected = value;
        try {
            if (key == "exp") {
                c.computed = std::to_string(H.exponent());
                c.pass = c.computed == value;
            } else {
                std::optional<Subgroup> S;
                if (key == "Gp" + ps) S = pw();
                else if (key == "zeta") S = zeta();
                else if (key == "Gpp") S = der();
                else if (key == "Gpp_cap_Gp" + ps) S = intersection(der(), pw());
                else if (key == "Gpp_cap_zeta") S = intersection(der(), zeta());
                else if (key == "Gp" + ps + "_cap_zeta") S = intersection(pw(), zeta());
                if (!S) {
                    c.computed = "unknown key";
                } else {
                    IsoType t = fingerprint(*S, cap);
                    c.computed = t.str();
                    c.pass = t == parse_abelian_type(value);
                }
            }
        } catch (const std::exception& ex) {
            c.computed = std::string("error: ") + ex.what();
        }
        row.checks.push_back(std::move(c));
    }
    return row;
}

TableReport verify_tables(const std::vector<CatalogEntry>& entries, std::uint64_t cap, unsigned threads) {
    std::vector<const CatalogEntry*> todo;
    for (const auto& e : entries)
        if (!e.expected.empty()) todo.push_back(&e);
    TableReport report;
    report.rows.resize(todo.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) report.rows[i] = verify_table_row(*todo[i], cap);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < todo.size(); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

// ---------------------------------------------------------------------------

FingerprintIndex::FingerprintIndex(std::filesystem::path smallgroups_dir) : dir_(std::move(smallgroups_dir)) {
    std::ifstream in(dir_ / "coverage.txt");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t order = 0, count = 0;
        std::string kind;
        if (ls >> order >> count >> kind) coverage_[order] = kind == "complete";
    }
}

bool FingerprintIndex::has_order(std::uint64_t order) const { return coverage_.count(order) > 0; }

bool FingerprintIndex::complete(std::uint64_t order) const {
    auto it = coverage_.find(order);
    return it != coverage_.end() && it->second;
}

const std::vector<std::pair<SmallGroupId, IsoType>>& FingerprintIndex::load(std::uint64_t order) const {
    std::lock_guard lock(mu_);
    auto it = cache_.find(order);
    if (it != cache_.end()) return it->second;
    std::vector<std::pair<SmallGroupId, IsoType>> v;
    const std::string prefix = "S" + std::to_string(order) + "_";
    if (std::filesystem::is_directory(dir_))
        for (const auto& f : std::filesystem::directory_iterator(dir_)) {
            const auto name = f.path().filename().string();
            if (name.rfind(prefix, 0) != 0 || f.path().extension() != ".pc") continue;
            auto e = import_presentation(f.path());
            if (!e.id) continue;
            v.emplace_back(*e.id, fingerprint(Subgroup::whole(e.group), kDefaultCap));
        }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return cache_.emplace(order, std::move(v)).first->second;
}

std::vector<SmallGroupId> FingerprintIndex::candidates(const IsoType& fp, std::uint64_t order) const {
    std::vector<SmallGroupId> out;
    for (const auto& [id, t] : load(order))
        if (t == fp) out.push_back(id);
    return out;
}

std::vector<std::pair<SmallGroupId, IsoType>> FingerprintIndex::entries(std::uint64_t order) const {
    return load(order);
}

}  // namespace lienil
