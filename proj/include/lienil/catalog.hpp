#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lienil/group_engine.hpp"
#include "lienil/structure.hpp"

namespace lienil {

enum class SourceKind { Builder, ItemPresentation, Imported };

std::string to_string(SourceKind k);

struct CatalogEntry {
    std::string name;
    SourceKind source = SourceKind::Builder;
    std::string origin;  // builder spec, theorem item, or file path
    PcGroupPtr group;
    std::optional<SmallGroupId> id;
    std::vector<std::pair<std::string, std::string>> expected;
    std::optional<int> witness_item;  // theorem item this group is a witness for, at its prime
};

CatalogEntry build_abelian(int p, const std::vector<std::uint64_t>& invariant_factors);
CatalogEntry build_dihedral(std::uint64_t order);
CatalogEntry build_quaternion(std::uint64_t order);
CatalogEntry build_heisenberg(int p);
// Generators g1..gk of order p and central c_ij = [g_j, g_i] of order p.
CatalogEntry build_free_class2(int p, int rank);
// Presentations written out in theorem items 46, 66 and 67. keep < ngens
// keeps the first keep generators (the quotient by the trailing central ones).
CatalogEntry build_item_presentation(int item, int p, int keep = 0);

// Order 7^7 with G' = C49xC7xC7 and gamma_3 = G'^7, d = {d(2)=3, d(8)=1}.
CatalogEntry build_item1_witness();

// Specs: abelian:P:n1,n2,..  dihedral:N  quaternion:N  heisenberg:P
// free_class2:P:K  item46:P  item66:P[:K]  item67:P[:K]  item1_witness
CatalogEntry build_from_spec(const std::string& spec);

CatalogEntry import_presentation(const std::filesystem::path& path);
CatalogEntry entry_from_text(const std::string& text, const std::string& name);

// Built-in entries (builders and theorem item presentations). Entries above
// max_order are skipped.
std::vector<CatalogEntry> builtin_catalog(std::uint64_t max_order = UINT64_MAX);
// Imported presentations under dir, sorted by (order, number).
std::vector<CatalogEntry> imported_catalog(const std::filesystem::path& dir, std::uint64_t max_order = UINT64_MAX);

std::filesystem::path default_data_dir();

struct TableCheck {
    std::string key;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct TableRowReport {
    std::string name;
    std::vector<TableCheck> checks;
    bool pass() const;
};

struct TableReport {
    std::vector<TableRowReport> rows;
    bool pass() const;
    std::size_t passed() const;
};

TableRowReport verify_table_row(const CatalogEntry& entry, std::uint64_t cap = kDefaultCap);
TableReport verify_tables(const std::vector<CatalogEntry>& entries, std::uint64_t cap = kDefaultCap,
                          unsigned threads = 0);

// Fingerprints of the shipped small groups, computed per order on demand.
class FingerprintIndex {
public:
    explicit FingerprintIndex(std::filesystem::path smallgroups_dir);

    bool has_order(std::uint64_t order) const;
    bool complete(std::uint64_t order) const;
    std::vector<SmallGroupId> candidates(const IsoType& fp, std::uint64_t order) const;
    std::vector<std::pair<SmallGroupId, IsoType>> entries(std::uint64_t order) const;

private:
    const std::vector<std::pair<SmallGroupId, IsoType>>& load(std::uint64_t order) const;

    std::filesystem::path dir_;
    std::map<std::uint64_t, bool> coverage_;
    mutable std::mutex mu_;
    mutable std::map<std::uint64_t, std::vector<std::pair<SmallGroupId, IsoType>>> cache_;
};

}  // namespace lienil
