#include <iostream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lienil/cli.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "lienil");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    int status = lienil::cli_main(static_cast<int>(args.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {status, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

const std::string kData = LIENIL_TEST_DATA_DIR;

}  // namespace

TEST_CASE("index") {
    auto r = run({"index", "--builder", "dihedral:8", "-p", "2"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "d_(2)=1"));
    CHECK(has(r.out, "t^L = 3"));
}

TEST_CASE("index of a file") {
    auto r = run({"index", kData + "/S243_22.pc", "-p", "3"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "S(243,22)"));
}

TEST_CASE("oracle") {
    auto r = run({"oracle", "--builder", "heisenberg:5", "-p", "5"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "t^L (oracle) = 6"));
    CHECK(has(r.out, "t_L (oracle) = 6"));
    CHECK(has(r.out, "AGREE"));
}

TEST_CASE("enumerate-d") {
    auto r = run({"enumerate-d", "-p", "7", "--weight", "10"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "{d(2)=3, d(8)=1}"));
    auto all = run({"enumerate-d", "--all-p", "--weight", "10"});
    CHECK(all.status == 0);
    CHECK(has(all.out, "p = 13"));
}

TEST_CASE("classify") {
    auto w = run({"classify", "--builder", "free_class2:2:5"});
    CHECK(w.status == 0);
    CHECK(has(w.out, "matched items: 91"));
    CHECK(has(w.out, "CONSISTENT"));

    auto bad = run({"--oracle-cap", "729", "classify", kData + "/S729_44.pc", "-p", "3"});
    CHECK(bad.status == 1);
    CHECK(has(bad.out, "INCONSISTENT"));
}

TEST_CASE("verify-tables") {
    auto r = run({"verify-tables", kData});
    CHECK(r.status == 0);
    CHECK(has(r.out, "S(243,22)"));
}

TEST_CASE("catalog") {
    auto l = run({"catalog", "list"});
    CHECK(l.status == 0);
    CHECK(has(l.out, "dihedral:8"));
    CHECK(has(l.out, "S(3125,72)"));
    auto b = run({"catalog", "build", "heisenberg:3"});
    CHECK(b.status == 0);
    CHECK(has(b.out, "comm 2 1 : g3^1"));
}

TEST_CASE("json output is stable") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"--json", "classify", "--builder", "dihedral:16", "-p", "2"},
          {"--json", "index", "--builder", "item66:3:5"},
          {"--json", "oracle", "--builder", "quaternion:16"},
          {"--json", "enumerate-d", "-p", "5"},
          {"--json", "catalog", "list"},
          {"--json", "verify-tables", kData}}) {
        CAPTURE(args[1]);
        auto a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK_NOTHROW((void)nlohmann::json::parse(a.out));
    }
    auto j = nlohmann::json::parse(run({"--json", "classify", "--builder", "dihedral:16", "-p", "2"}).out);
    CHECK(j["t_upper"] == 5);
    CHECK(j["verdict"] == "CONSISTENT");
}

TEST_CASE("corrected conditions") {
    auto r = run({"--corrected-conditions", "classify", "--builder", "free_class2:2:5"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "conditions: corrected"));
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"index", "--builder", "nope:1"}).status == 2);
    CHECK(run({"index", kData + "/missing.pc"}).status == 2);
    CHECK(run({"index", "--builder", "heisenberg:3", "-p", "2"}).status == 2);
    CHECK(run({"--cap", "100", "index", "--builder", "free_class2:2:5"}).status == 2);
    CHECK(run({"--frobnicate"}).status == 2);
    CHECK(run({"enumerate-d", "-p", "4"}).status == 2);
    CHECK(run({"verify-tables", "/nonexistent"}).status == 2);
    auto e = run({"index", "--builder", "nope:1"});
    CHECK(has(e.err, "unknown builder"));
}

TEST_CASE("help exits with 0") {
    auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(has(r.out, "enumerate-d"));
}
