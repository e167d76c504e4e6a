#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string cli = KRS_CLI_PATH;

int run(const std::string& args) {
    std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("krs_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli end to end") {
    TempDir tmp;
    auto aks = (tmp.path / "a.aks").string();
    auto vec = (tmp.path / "v.rl").string();
    auto foca = (tmp.path / "f.oca").string();
    auto ioca = (tmp.path / "i.oca").string();
    auto back = (tmp.path / "b.aks").string();
    auto report = (tmp.path / "report.json").string();

    SECTION("generate, check, roundtrip, laws") {
        REQUIRE(run("gen-aks --terms 3 --stacks 3 --density 0.3 --seed 7 -o " + aks) == 0);
        CHECK(run("check " + aks) == 0);
        CHECK(run("roundtrip " + aks) == 0);
        CHECK(run("laws all " + aks + " --json-report " + report) == 0);
        auto j = nlohmann::json::parse(slurp(report));
        CHECK(j["passed"] == true);
        CHECK(j["checks"].is_array());
        CHECK(!j["checks"].empty());
        CHECK(j["suite"] == "all");
    }

    SECTION("vector polarity runs the lattice suites only") {
        REQUIRE(run("gen-vec --prime 2 -o " + vec) == 0);
        CHECK(run("check " + vec) == 0);
        CHECK(run("laws polarity " + vec) == 0);
        CHECK(run("laws stackops " + vec) == 0);
        CHECK(run("laws all " + vec) == 0);
        // an explicitly named suite that needs an app table is a usage error
        CHECK(run("laws aks " + vec) == 2);
    }

    SECTION("constructions round through files") {
        // this seed's perp algebra is an IOCA without full adjunction
        REQUIRE(run("gen-aks --terms 3 --stacks 5 --density 0.5 --qp-seed 1 --seed 37 -o " +
                    aks) == 0);
        REQUIRE(run("build-foca " + aks + " -o " + foca) == 0);
        REQUIRE(run("build-ioca " + aks + " -o " + ioca) == 0);
        CHECK(run("laws oca " + foca) == 0);
        CHECK(run("roundtrip " + foca) == 0);
        REQUIRE(run("build-aks " + foca + " -o " + back) == 0);
        CHECK(run("check " + back) == 0);
        // no full adjunction, so deriving an AKS from it must fail
        CHECK(run("build-aks " + ioca) != 0);
        CHECK(run("heyting " + foca) == 0);
        CHECK(run("heyting " + aks + " --variant perp") == 0);
    }

    SECTION("saturation repairs a broken pole") {
        auto bad = (tmp.path / "bad.aks").string();
        std::ofstream out(bad);
        out << "AKS 1 2\nPOLE 1\n0 1\nPUSH\n0 0 1\n0 1 0\nAPP\n0 0 0\nQP 0\nK 0\nS 0\n";
        out.close();
        CHECK(run("check " + bad) == 1);
        auto fixed = (tmp.path / "fixed.aks").string();
        REQUIRE(run("saturate " + bad + " -o " + fixed) == 0);
        CHECK(run("check " + fixed) == 0);
        CHECK(run("check " + bad + " --saturate") == 0);
    }

    SECTION("a user-supplied algebra with broken axioms loads but fails the laws") {
        auto oca = (tmp.path / "broken.oca").string();
        std::ofstream out(oca);
        // application constantly the top breaks PK at the bottom element
        out << "OCA 2\nLEQ 3\n0 0\n0 1\n1 1\nAPP\n0 0 1\n0 1 1\n1 0 1\n1 1 1\n"
            << "IMP\n0 0 1\n0 1 1\n1 0 0\n1 1 1\nK 1\nS 1\nPHI 1\n1\n";
        out.close();
        CHECK(run("check " + oca) == 0);       // structurally fine
        CHECK(run("laws oca " + oca) == 1);    // PK is violated
        CHECK(run("build-aks " + oca) != 0);   // and it is no FOCA
    }

    SECTION("usage errors") {
        CHECK(run("laws bogus-suite " + aks) == 2);
        CHECK(run("check /nonexistent/file.aks") == 2);
        CHECK(run("frobnicate") == 2);
        CHECK(run("") == 2);
    }
}
