#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "khi/cli.hpp"

#include "json.hpp"

#include <sstream>

using namespace khi;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(KHI_DATA_DIR) + "/" + file; }

}  // namespace

TEST_CASE("validate accepts the bundled diagrams") {
    for (auto f : {"unknot.sik", "3_1.sik", "m9_46.sik", "hopf_periodic.sik"}) {
        Run r = run({"validate", "--input", data(f)});
        CHECK(r.code == 0);
        CHECK(r.out.find("valid") != std::string::npos);
    }
}

TEST_CASE("validate rejects garbage input") {
    Run r = run({"validate", "--input", "/dev/null"});
    CHECK(r.code == 1);
    Run r2 = run({"validate", "--input", data("no_such_file.sik")});
    CHECK(r2.code == 1);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({"homology"}).code == 1);                          // missing --input
    CHECK(run({"homology", "--input", data("3_1.sik"), "--theory", "zz"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);                        // unknown command
    CHECK(run({"homology", "--input", data("3_1.sik"), "--bogus"}).code == 1);
}

TEST_CASE("homology json carries the schema and matches the text module") {
    Run j = run({"homology", "--input", data("3_1.sik"), "--theory", "bn",
                 "--involutive", "--variant", "reduced", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("theory") == "bn");
    CHECK(doc.at("involutive") == true);
    CHECK(doc.at("variant") == "reduced");
    // BNI_r(3_1): two towers and two torsion pieces
    auto free = doc.at("free");
    REQUIRE(free.size() == 2);
    CHECK(free[0] == nlohmann::json::array({0, 2}));
    CHECK(free[1] == nlohmann::json::array({1, 2}));
    auto tors = doc.at("torsion");
    REQUIRE(tors.size() == 2);
    CHECK(tors[0] == nlohmann::json::array({3, 8, 1}));
    CHECK(tors[1] == nlohmann::json::array({4, 8, 1}));

    Run t = run({"homology", "--input", data("3_1.sik"), "--theory", "bn",
                 "--involutive", "--variant", "reduced"});
    CHECK(t.code == 0);
    CHECK(t.out.find("F[H]") != std::string::npos);
}

TEST_CASE("s reports the full invariant line for m9_46") {
    Run r = run({"s", "--input", data("m9_46.sik")});
    CHECK(r.code == 0);
    CHECK(r.out.find("s_lower=0 s_upper=2 s_classic=0 w=3 r=8 d_lower=2 d_upper=3") !=
          std::string::npos);
}

TEST_CASE("pair verifies the Lee pairing law") {
    CHECK(run({"pair", "--input", data("unknot.sik")}).code == 0);
    CHECK(run({"pair", "--input", data("3_1.sik")}).code == 0);
}

TEST_CASE("crossing cap exits 3") {
    Run r = run({"homology", "--input", data("3_1.sik"), "--cap", "2"});
    CHECK(r.code == 3);
}

TEST_CASE("invalid configurations exit 1") {
    // hopf_periodic has no basepoint -> reduced is unavailable
    CHECK(run({"homology", "--input", data("hopf_periodic.sik"), "--variant",
               "reduced"}).code == 1);
    // the sigma-tau cone only exists unreduced
    CHECK(run({"homology", "--input", data("hopf_periodic.sik"), "--involutive",
               "--mode", "sigma-tau", "--variant", "coreduced"}).code == 1);
}

TEST_CASE("latex output renders the table environment") {
    Run r = run({"homology", "--input", data("3_1.sik"), "--theory", "kh",
                 "--involutive", "--variant", "reduced", "--format", "latex"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\\begin{tabular}") != std::string::npos);
    CHECK(r.out.find("\\mathbb{F}") != std::string::npos);
}
