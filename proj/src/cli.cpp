#include "lienil/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lienil/algebra_oracle.hpp"
#include "lienil/catalog.hpp"
#include "lienil/classifier.hpp"
#include "lienil/dvector_analysis.hpp"
#include "lienil/fp_linalg.hpp"
#include "lienil/lie_dimension.hpp"

namespace lienil {

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
    std::uint64_t cap = kDefaultCap;
    std::uint64_t oracle_cap = kDefaultOracleCap;
    bool json = false;
    bool corrected = false;
    std::string data_dir;
};

struct InputSpec {
    std::string file;
    std::string builder;
    int p = 0;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        std::size_t pos = 0;
        auto x = std::stoull(v, &pos);
        if (pos == std::string(v).size()) return x;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("environment variable ") + name + " is not a number: " + v);
}

CatalogEntry load(const InputSpec& in) {
    if (in.file.empty() == in.builder.empty()) throw InputError("give exactly one of a presentation file or --builder");
    return in.file.empty() ? build_from_spec(in.builder) : import_presentation(in.file);
}

int prime_for(const InputSpec& in, const CatalogEntry& e) { return in.p ? in.p : e.group->p(); }

void add_input(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("file", in.file, "presentation file");
    cmd->add_option("--builder", in.builder, "catalog builder spec, e.g. dihedral:8 or abelian:3:9,3");
    cmd->add_option("-p", in.p, "characteristic of K (default: the prime of the group)");
}

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

ojson dseq_json(const DSequence& d) {
    ojson j = ojson::object();
    for (const auto& [m, v] : d.d) j[std::to_string(m)] = v;
    return j;
}

std::string dseq_lines(const DSequence& d) {
    if (d.d.empty()) return "d-sequence: all zero\n";
    std::string s;
    for (const auto& [m, v] : d.d) s += "d_(" + std::to_string(m) + ")=" + std::to_string(v) + "\n";
    return s;
}

int cmd_index(const Globals& g, const InputSpec& in) {
    auto e = load(in);
    const int p = prime_for(in, e);
    auto chain = lie_dimension_chain(e.group, p, g.cap);
    auto d = d_sequence_of_chain(chain);
    const auto t = jennings_index(d);
    if (g.json) {
        ojson j;
        j["group"] = e.name;
        j["p"] = p;
        j["order"] = e.group->order();
        ojson orders = ojson::object();
        for (std::size_t k = 0; k < chain.terms.size(); ++k) orders[std::to_string(k + 2)] = chain.terms[k].order();
        j["chain_orders"] = orders;
        j["d_sequence"] = dseq_json(d);
        j["t_upper"] = t;
        print_json(j);
        return 0;
    }
    std::cout << "group: " << e.name << "\np: " << p << "\norder: " << e.group->order() << "\n";
    std::cout << "Lie dimension chain:";
    for (std::size_t k = 0; k < chain.terms.size(); ++k) std::cout << " |D_(" << k + 2 << ")|=" << chain.terms[k].order();
    std::cout << "\n" << dseq_lines(d) << "t^L = " << t << "\n";
    return 0;
}

int cmd_oracle(const Globals& g, const InputSpec& in) {
    auto e = load(in);
    const int p = prime_for(in, e);
    const auto jennings = jennings_index(d_sequence(e.group, p, g.cap));
    auto A = build_algebra(e.group, p, g.oracle_cap);
    auto up = upper_lie_chain(A);
    auto low = lower_lie_chain(A);
    if (!up.nilpotent || !low.nilpotent) throw NotLieNilpotent("KG is not Lie nilpotent: " + up.note + low.note);
    const bool agree = up.index == jennings;
    if (g.json) {
        ojson j;
        j["group"] = e.name;
        j["p"] = p;
        j["t_upper_oracle"] = up.index;
        j["t_lower_oracle"] = low.index;
        j["t_upper_jennings"] = jennings;
        j["upper_dims"] = up.dims();
        j["lower_dims"] = low.dims();
        j["agree"] = agree;
        print_json(j);
    } else {
        std::cout << "group: " << e.name << "\np: " << p << "\n";
        std::cout << "t^L (oracle) = " << up.index << "\nt_L (oracle) = " << low.index << "\n";
        std::cout << "t^L (Jennings) = " << jennings << "\n" << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_classify(const Globals& g, const InputSpec& in, const FingerprintIndex& index) {
    auto e = load(in);
    VerifyOptions opts;
    opts.set = g.corrected ? ConditionSet::Corrected : ConditionSet::Literal;
    opts.cap = g.cap;
    opts.oracle_cap = g.oracle_cap;
    opts.index = &index;
    auto r = verify_theorem(e.group, prime_for(in, e), opts, e.name);
    std::cout << (g.json ? r.json() + "\n" : r.text());
    return r.verdict == Verdict::Inconsistent ? 1 : 0;
}

int cmd_enumerate(const Globals& g, int p, int weight, bool all_p, bool unfiltered) {
    if (all_p) {
        auto rep = proof_case_report(weight);
        if (g.json) {
            ojson j;
            j["weight"] = weight;
            ojson by = ojson::object();
            for (const auto& [q, list] : rep.survivors) {
                ojson arr = ojson::array();
                for (const auto& v : list) arr.push_back(dseq_json(v));
                by[std::to_string(q)] = arr;
            }
            j["survivors"] = by;
            print_json(j);
        } else {
            std::cout << rep.text();
        }
        return 0;
    }
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw InputError("-p must be a prime");
    auto list = unfiltered ? enumerate_weight(p, weight) : enumerate_admissible(p, weight);
    if (g.json) {
        ojson j;
        j["p"] = p;
        j["weight"] = weight;
        j["filtered"] = !unfiltered;
        j["t_upper"] = 2 + static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(weight);
        ojson arr = ojson::array();
        for (const auto& v : list) arr.push_back(dseq_json(v));
        j["vectors"] = arr;
        print_json(j);
    } else {
        std::cout << (unfiltered ? "d-vectors" : "lemma-admissible d-vectors") << " of weight " << weight << " at p = " << p
                  << " (" << list.size() << ", t^L = " << 2 + (p - 1) * weight << ")\n";
        for (const auto& v : list) std::cout << "  " << v.str() << "\n";
    }
    return 0;
}

int cmd_verify_tables(const Globals& g, const std::string& dir) {
    auto entries = imported_catalog(dir);
    auto rep = verify_tables(entries, g.cap);
    if (g.json) {
        ojson rows = ojson::array();
        for (const auto& r : rep.rows) {
            ojson row;
            row["group"] = r.name;
            row["pass"] = r.pass();
            ojson checks = ojson::array();
            for (const auto& c : r.checks)
                checks.push_back({{"key", c.key}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
            row["checks"] = checks;
            rows.push_back(row);
        }
        print_json({{"rows", rows}, {"passed", rep.passed()}, {"total", rep.rows.size()}});
    } else {
        for (const auto& r : rep.rows) {
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << "\n";
            for (const auto& c : r.checks)
                if (!c.pass) std::cout << "  " << c.key << ": expected " << c.expected << ", computed " << c.computed << "\n";
        }
        std::cout << rep.passed() << "/" << rep.rows.size() << " rows pass\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_catalog_list(const Globals& g, const std::string& dir) {
    auto entries = builtin_catalog();
    auto imported = imported_catalog(dir);
    for (auto& e : imported) entries.push_back(std::move(e));
    if (g.json) {
        ojson arr = ojson::array();
        for (const auto& e : entries) {
            ojson j;
            j["name"] = e.name;
            j["source"] = to_string(e.source);
            j["origin"] = e.origin;
            j["p"] = e.group->p();
            j["order"] = e.group->order();
            if (e.witness_item) j["witness_item"] = *e.witness_item;
            arr.push_back(j);
        }
        print_json(arr);
    } else {
        for (const auto& e : entries)
            std::cout << e.name << "\t" << to_string(e.source) << "\tp=" << e.group->p() << "\torder=" << e.group->order()
                      << (e.witness_item ? "\twitness of item " + std::to_string(*e.witness_item) : "") << "\n";
    }
    return 0;
}

int cmd_catalog_build(const std::string& spec) {
    auto e = build_from_spec(spec);
    std::cout << "# " << e.name << "\n" << format_presentation(e.group->data());
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Lie nilpotency indices of modular group algebras of finite p-groups"};
    app.require_subcommand(1);
    Globals g;
    std::optional<std::uint64_t> cap, oracle_cap;
    app.add_option("--cap", cap, "largest subgroup enumerated explicitly (env LIENIL_CAP)");
    app.add_option("--oracle-cap", oracle_cap, "largest group handed to the group-algebra oracle (env LIENIL_ORACLE_CAP)");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--corrected-conditions", g.corrected, "use the corrected reading of flagged theorem items");
    app.add_option("--data-dir", g.data_dir, "directory of small-group presentations (env LIENIL_DATA_DIR)");

    InputSpec index_in, oracle_in, classify_in;
    auto* index = app.add_subcommand("index", "Lie dimension chain, d-sequence and t^L via Jennings' formula");
    add_input(index, index_in);
    auto* oracle = app.add_subcommand("oracle", "t^L and t_L computed directly in KG");
    add_input(oracle, oracle_in);
    auto* classify = app.add_subcommand("classify", "match the theorem conditions and check the t^L = 10p-8 criterion");
    add_input(classify, classify_in);

    int enum_p = 0, weight = 10;
    bool all_p = false, unfiltered = false;
    auto* enumerate = app.add_subcommand("enumerate-d", "d-vectors of a given weight surviving the lemma");
    enumerate->add_option("-p", enum_p, "prime");
    enumerate->add_option("--weight", weight, "sum of m * d_(m+1)")->check(CLI::PositiveNumber);
    enumerate->add_flag("--all-p", all_p, "report for p in 2, 3, 5, 7, 11, 13");
    enumerate->add_flag("--unfiltered", unfiltered, "skip the lemma filter");

    std::string tables_dir;
    auto* tables = app.add_subcommand("verify-tables", "check table invariants recorded in presentation files");
    tables->add_option("dir", tables_dir, "directory of presentation files");

    auto* catalog = app.add_subcommand("catalog", "built-in and imported groups");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog entries");
    std::string build_spec;
    auto* build = catalog->add_subcommand("build", "print the presentation of a builder spec");
    build->add_option("spec", build_spec, "builder spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g.cap = cap ? *cap : env_u64("LIENIL_CAP", kDefaultCap);
        g.oracle_cap = oracle_cap ? *oracle_cap : env_u64("LIENIL_ORACLE_CAP", kDefaultOracleCap);
        if (g.data_dir.empty()) g.data_dir = default_data_dir().string();
        FingerprintIndex fp_index(g.data_dir);

        if (*index) return cmd_index(g, index_in);
        if (*oracle) return cmd_oracle(g, oracle_in);
        if (*classify) return cmd_classify(g, classify_in, fp_index);
        if (*enumerate) {
            if (!all_p && enum_p == 0) throw InputError("enumerate-d needs -p or --all-p");
            return cmd_enumerate(g, enum_p, weight, all_p, unfiltered);
        }
        if (*tables) return cmd_verify_tables(g, tables_dir.empty() ? g.data_dir : tables_dir);
        if (*list) return cmd_catalog_list(g, g.data_dir);
        if (*build) return cmd_catalog_build(build_spec);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InconsistentPresentation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap or LIENIL_CAP)\n";
        return 2;
    } catch (const NotLieNilpotent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace lienil
