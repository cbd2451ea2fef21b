#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "fpt/cli.hpp"
#include "fpt/json_io.hpp"
#include "fpt/tree.hpp"

using namespace fpt;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval: pinned exact probabilities") {
    const auto a = run({"eval", "--tree", "figure1-gamma", "--set", "counterexample"});
    CHECK(a.code == 0);
    CHECK(a.out.find("1075/7776") != std::string::npos);
    CHECK(a.out.find("0.138245884") != std::string::npos);

    const auto b = run({"eval", "--tree", "figure1-gamma-prime", "--set", "counterexample"});
    CHECK(b.code == 0);
    CHECK(b.out.find("499/3888") != std::string::npos);

    const auto c = run({"eval", "--tree", "paths:2,3", "--some-path", "--set", "box:[0,1/2]^2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("37/64") != std::string::npos);

    const auto d = run({"eval", "--tree", "paths:2,3", "--some-path", "--set", "empty:2"});
    CHECK(d.code == 0);
    CHECK(d.out.substr(0, 2) == "0\n");
}

TEST_CASE("eval: file tokens load JSON documents") {
    const std::string tree_path = "/tmp/fpt_cli_tree.json";
    const std::string set_path = "/tmp/fpt_cli_set.json";
    write_text_file(tree_path, tree_to_json(build_paths_tree(1, 2)));
    write_text_file(set_path, R"({"dim": 1, "boxes": [{"lo": ["0"], "hi": ["1/2"]}]})");
    const auto r = run({"eval", "--tree", "file:" + tree_path, "--some-path", "--set", set_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("3/4") != std::string::npos);
    std::remove(tree_path.c_str());
    std::remove(set_path.c_str());
}

TEST_CASE("dominates: three-way exit protocol") {
    const auto yes = run({"dominates", "--spherical", "poly:1", "const:1", "--horizon", "50"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("dominates") == 0);

    const auto no = run({"dominates", "--spherical", "const:1", "poly:1", "--horizon", "50"});
    CHECK(no.code == 1);
    CHECK(no.out.find("does not dominate") != std::string::npos);

    const auto h2 = run({"dominates", "--height2", "3,1", "2,2"});
    CHECK(h2.code == 1);
    CHECK(h2.out.find("witness:2,eps") != std::string::npos);

    const auto h2yes = run({"dominates", "--height2", "2,2", "3,1"});
    CHECK(h2yes.code == 0);

    const auto open = run({"dominates", "figure1-gamma", "figure1-gamma-prime"});
    CHECK(open.code == 2);
    CHECK(open.out.find("undecidable by implemented criteria") != std::string::npos);
    CHECK(open.out.find("counterexample set reverses intuition") != std::string::npos);
    CHECK(open.out.find("1075/7776 vs 499/3888") != std::string::npos);
}

TEST_CASE("tilde prints the regularization table") {
    const auto r = run({"tilde", "--growth", "alt:1,2", "-N", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("regularization of alt:1,2") != std::string::npos);
    CHECK(r.out.find("1.41421356237") != std::string::npos);

    const auto csv = run({"tilde", "--growth", "poly:1", "-N", "4", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("n,f,tilde,stable") == 0);

    const auto horizon = run({"tilde", "--growth", "table:1,2", "-N", "10"});
    CHECK(horizon.code == 65);
}

TEST_CASE("classify verdict lines are machine-pinned") {
    const auto diverge = run({"classify", "--growth", "poly:1"});
    CHECK(diverge.code == 0);
    CHECK(diverge.out.rfind("no-explosion\n", 0) == 0);
    CHECK(diverge.out.find("analytic verdict") != std::string::npos);
    CHECK(diverge.out.find("0.367879441171") != std::string::npos);

    const auto boom = run({"classify", "--growth", "poly:2"});
    CHECK(boom.code == 0);
    CHECK(boom.out.rfind("explosion\n", 0) == 0);

    const auto alt = run({"classify", "--growth", "alt:1,2"});
    CHECK(alt.code == 0);
    CHECK(alt.out.rfind("explosion\n", 0) == 0);
}

TEST_CASE("simulate writes deterministic seeded outputs") {
    namespace fs = std::filesystem;
    const std::string dir = "/tmp/fpt_cli_sim";
    fs::remove_all(dir);
    const std::vector<std::string> args{"simulate",   "--growth", "poly:1", "--depth", "12",
                                        "--replicas", "2",        "--mode", "greedy",  "--seed",
                                        "5",          "--out",    dir};
    const auto r1 = run(args);
    CHECK(r1.code == 0);
    CHECK(r1.out.find("wrote") != std::string::npos);
    REQUIRE(fs::exists(dir + "/trajectory.csv"));
    REQUIRE(fs::exists(dir + "/summary.json"));
    REQUIRE(fs::exists(dir + "/manifest.json"));
    const std::string first = read_text_file(dir + "/trajectory.csv");
    CHECK(first.rfind("level,m_hat,normalizer,ratio,mode,seed,replica", 0) == 0);

    const auto r2 = run(args);
    CHECK(r2.code == 0);
    CHECK(read_text_file(dir + "/trajectory.csv") == first);
    fs::remove_all(dir);
}

TEST_CASE("scan-conjecture sweeps clean") {
    namespace fs = std::filesystem;
    const std::string dir = "/tmp/fpt_cli_scan";
    fs::remove_all(dir);
    const auto r = run({"scan-conjecture", "--count", "25", "--seed", "3", "--out", dir});
    CHECK(r.code == 0);
    CHECK(r.out.find("checked 25 instances") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bad input exits 64 with a diagnostic") {
    const auto r = run({"classify", "--growth", "warp:9"});
    CHECK(r.code == 64);
    CHECK(r.err.find("error:") != std::string::npos);

    const auto box = run({"eval", "--tree", "paths:1,1", "--some-path", "--set", "box:[2,3]"});
    CHECK(box.code == 64);
}

TEST_CASE("help and version plumb through the parser") {
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("eval") != std::string::npos);

    const auto ver = run({"--version"});
    CHECK(ver.code == 0);

    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code != 0);
}
