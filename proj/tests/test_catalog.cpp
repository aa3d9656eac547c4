#include <set>

#include "doctest.h"
#include "lienil/catalog.hpp"
#include "support.hpp"

using namespace lienil;

namespace {

std::filesystem::path data_dir() { return LIENIL_TEST_DATA_DIR; }

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("abelian builder") {
    auto c2 = build_abelian(2, {2});
    CHECK(c2.group->ngens() == 1);
    CHECK(c2.name == "abelian:2:2");
    auto c93 = build_abelian(3, {9, 3});
    CHECK(c93.group->ngens() == 3);
    CHECK(abelian_invariants(Subgroup::whole(c93.group)) == std::vector<std::uint64_t>{9, 3});
    auto c = build_abelian(5, {25, 5, 5, 5, 5});
    CHECK(c.group->order() == ipow(5, 6));
    CHECK(fingerprint(Subgroup::whole(c.group)).str() == "C25xC5xC5xC5xC5");
    CHECK_THROWS(build_abelian(3, {6}));
    CHECK_THROWS(build_abelian(4, {4}));
}

TEST_CASE("families") {
    auto d8 = build_dihedral(8);
    CHECK(d8.group->ngens() == 3);
    CHECK(d8.group->order() == 8);
    auto q8 = build_quaternion(8);
    // Q_8 has a single involution
    int involutions = 0;
    for (const auto& x : ref::all_elements(q8.group)) involutions += ref::order_of(q8.group, x) == 2;
    CHECK(involutions == 1);
    int d_involutions = 0;
    for (const auto& x : ref::all_elements(d8.group)) d_involutions += ref::order_of(d8.group, x) == 2;
    CHECK(d_involutions == 5);

    auto h5 = build_heisenberg(5);
    CHECK(h5.group->order() == 125);
    CHECK(exponent(Subgroup::whole(h5.group)) == 5);

    auto w = build_free_class2(2, 5);
    CHECK(w.group->order() == ipow(2, 15));
    CHECK(w.witness_item == std::optional<int>{91});
    auto L = lower_central_series(w.group);
    CHECK(L[1].order() == 1024);
    CHECK(L[1].codes().size() == 1024);
    CHECK(fingerprint(L[1]).str() == "C2xC2xC2xC2xC2xC2xC2xC2xC2xC2");
    CHECK(L[2].order() == 1);
}

TEST_CASE("presentations written out in theorem items") {
    auto i66 = build_item_presentation(66, 3);
    CHECK(i66.group->order() == ipow(3, 7));
    auto w66 = Subgroup::whole(i66.group);
    CHECK(fingerprint(derived_subgroup(w66)).str() == "C3");
    CHECK(center(w66).order() == ipow(3, 5));

    auto i67 = build_item_presentation(67, 3);
    auto G = i67.group;
    CHECK(G->order() == ipow(3, 7));
    auto w67 = Subgroup::whole(G);
    auto D = derived_subgroup(w67);
    CHECK(fingerprint(D).str() == "C3");
    CHECK(D.contains(G->generator(4)));
    // brute-force center: elements commuting with every generator
    std::size_t central = 0;
    for (const auto& x : ref::all_elements(G)) {
        bool ok = true;
        for (int i = 0; i < G->ngens() && ok; ++i) ok = G->multiply(x, G->generator(i)) == G->multiply(G->generator(i), x);
        central += ok;
    }
    CHECK(center(w67).order() == central);
    CHECK(central == ipow(3, 3));  // <e, f, g>

    auto i46 = build_item_presentation(46, 5);
    CHECK(i46.group->order() == ipow(5, 5));
    auto Z = center(Subgroup::whole(i46.group));
    for (int k : {2, 3, 4}) CHECK(Z.contains(i46.group->generator(k)));

    auto q = build_from_spec("item66:3:5");
    CHECK(q.group->order() == 243);
    CHECK_THROWS(build_item_presentation(12, 3));
}

TEST_CASE("builder specs") {
    CHECK(build_from_spec("abelian:3:9,3").group->order() == 27);
    CHECK(build_from_spec("dihedral:16").group->order() == 16);
    CHECK(build_from_spec("free_class2:3:3").group->order() == 729);
    CHECK(build_from_spec("item1_witness").group->order() == ipow(7, 7));
    for (const char* bad : {"", "dihedral", "dihedral:12", "abelian:3", "abelian:3:x", "heisenberg:4", "nope:3",
                            "free_class2:2:6", "item66:3:1:2"})
        CHECK_THROWS_AS(build_from_spec(bad), std::invalid_argument);
}

TEST_CASE("the builtin catalog") {
    auto cat = builtin_catalog();
    std::set<std::string> names;
    for (const auto& e : cat) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second);
        CHECK(e.group->order() == ipow(static_cast<std::uint64_t>(e.group->p()), e.group->ngens()));
        // every builtin entry survives a round trip through the file format
        auto again = entry_from_text(format_presentation(e.group->data()), e.name);
        CHECK(again.group->order() == e.group->order());
    }
    CHECK(cat.size() >= 60);
    for (const auto& e : builtin_catalog(256)) CHECK(e.group->order() <= 256);
}

TEST_CASE("import") {
    auto s32 = import_presentation(data_dir() / "S32_2.pc");
    CHECK(s32.group->order() == 32);
    CHECK(s32.id == std::optional<SmallGroupId>{SmallGroupId{32, 2}});
    CHECK(s32.name == "S(32,2)");

    auto t = import_presentation(data_dir() / "S3125_2.pc");
    CHECK(t.expected.size() == 7);
    CHECK(t.expected[0] == std::pair<std::string, std::string>{"Gp5", "C5xC5"});

    CHECK_THROWS_AS(entry_from_text("p 2\ngens 3\npow 1 : g2^1\ncomm 2 1 : g3^1\n", "bad"), InconsistentPresentation);
    CHECK_THROWS_AS(entry_from_text("p 2\ngens 3\nid 16 1\n", "bad"), std::invalid_argument);
    CHECK_THROWS(import_presentation(data_dir() / "missing.pc"));
}

TEST_CASE("imported catalog is sorted and complete where declared") {
    auto cat = imported_catalog(data_dir(), 256);
    std::map<std::uint64_t, std::size_t> counts;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        REQUIRE(cat[i].id);
        if (i) CHECK(*cat[i - 1].id < *cat[i].id);
        counts[cat[i].id->order]++;
    }
    // numbers of groups of each order
    CHECK(counts[16] == 14);
    CHECK(counts[32] == 51);
    CHECK(counts[64] == 267);
    CHECK(counts[81] == 15);
    CHECK(counts[243] == 67);
}

TEST_CASE("table rows") {
    auto row = [](const char* f) { return verify_table_row(import_presentation(data_dir() / f)); };
    auto get = [](const TableRowReport& r, const std::string& key) {
        for (const auto& c : r.checks)
            if (c.key == key) return c.computed;
        return std::string("missing");
    };
    auto r72 = row("S3125_72.pc");
    CHECK(r72.pass());
    CHECK(get(r72, "Gp5") == "1");
    CHECK(get(r72, "exp") == "5");
    CHECK(get(r72, "Gpp") == "C5");
    CHECK(get(r72, "Gpp_cap_Gp5") == "1");

    auto r5867 = row("S2187_5867.pc");
    CHECK(r5867.pass());
    CHECK(get(r5867, "Gp3") == "C3xC3");
    CHECK(get(r5867, "exp") == "9");
    CHECK(get(r5867, "Gpp_cap_Gp3") == "1");

    auto r22 = row("S243_22.pc");
    CHECK(r22.pass());
    CHECK(get(r22, "Gp3") == "C9xC3");
    CHECK(get(r22, "Gpp") == "C9");
    CHECK(get(r22, "Gpp_cap_Gp3") == "C9");
}

TEST_CASE("a wrong expectation fails its row") {
    auto e = import_presentation(data_dir() / "S243_22.pc");
    e.expected = {{"Gp3", "C3xC3"}, {"exp", "27"}};
    auto r = verify_table_row(e);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.checks[0].pass);
    CHECK(r.checks[1].pass);
    e.expected = {{"colour", "red"}};
    CHECK_FALSE(verify_table_row(e).pass());
}

TEST_CASE("every shipped table row passes") {
    std::vector<CatalogEntry> rows;
    for (auto& e : imported_catalog(data_dir()))
        if (!e.expected.empty()) rows.push_back(std::move(e));
    auto report = verify_tables(rows);
    CHECK(report.pass());
    CHECK(report.passed() == rows.size());
    REQUIRE(report.rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(report.rows[i].name == rows[i].name);
    // same result single-threaded
    auto serial = verify_tables(rows, kDefaultCap, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial.rows[i].pass() == report.rows[i].pass());
}

TEST_CASE("fingerprint index") {
    FingerprintIndex index(data_dir());
    CHECK(index.has_order(64));
    CHECK(index.complete(64));
    CHECK(index.has_order(128));
    CHECK_FALSE(index.complete(128));
    CHECK_FALSE(index.has_order(512));
    CHECK(index.entries(81).size() == 15);
    for (const auto& [id, fp] : index.entries(81)) {
        auto c = index.candidates(fp, 81);
        CHECK(std::find(c.begin(), c.end(), id) != c.end());
    }
    // abelian groups are told apart by their invariants
    auto c = index.candidates(parse_abelian_type("C9xC9"), 81);
    CHECK(c == std::vector<SmallGroupId>{{81, 2}});
}
