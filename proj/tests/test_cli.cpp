#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "routelab/cli.hpp"

using namespace routelab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "routelab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("routelab_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kTri = "p route 3 3 2\ne 0 1 1\ne 1 2 1\ne 0 2 3\n";
const std::string kWl = "p route 3 3 2\ne 0 1 5\ne 1 2 1\ne 0 2 2\n";

}  // namespace

TEST_CASE("route") {
    const std::string tri = temp_file("tri.txt", kTri);
    Run r = cli({"route", tri, "--algo", "mst"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "e 0 1 1\ne 1 2 1\n");
    CHECK(cli({"route", temp_file("two.txt", "p route 2 1 0\ne 0 1 7/2\n"), "--algo", "shortest-path"}).out ==
          "e 0 1 7/2\n");
    CHECK(cli({"route", tri, "--algo", "dijkstra"}).code == kExitUsage);
    CHECK(cli({"route", tri, "--algo", "mst", "--dest", "9"}).code == kExitUsage);

    const std::string dot = (std::filesystem::temp_directory_path() / "routelab_cli_tri.dot").string();
    CHECK(cli({"route", tri, "--algo", "weakest-link", "--dot", dot}).code == kExitOk);
    CHECK(read_file(dot).find("doublecircle") != std::string::npos);
}

TEST_CASE("check") {
    const std::string tri = temp_file("tri.txt", kTri);
    Run ok = cli({"check", tri, "--algo", "mst", "--axiom", "robustness"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("\"violation_count\": 0") != std::string::npos);

    Run bad = cli({"check", tri, "--algo", "shortest-path", "--axiom", "shift-invariance", "--seed", "1"});
    CHECK(bad.code == kExitViolations);
    CHECK(bad.out.find("\"violations\"") != std::string::npos);

    CHECK(cli({"check", tri, "--algo", "mst", "--axiom", "8"}).code == kExitUsage);
    CHECK(cli({"check", temp_file("garbage.txt", "hello\n"), "--algo", "mst", "--axiom", "1"}).code == kExitUsage);
    CHECK(cli({"check", temp_file("missing-dir/none.txt", ""), "--algo", "mst", "--axiom", "1"}).code == kExitUsage);
    const std::string k4 = temp_file("k4.txt", "p route 4 6 0\ne 0 1 1\ne 0 2 2\ne 0 3 3\ne 1 2 4\ne 1 3 5\ne 2 3 6\n");
    CHECK(cli({"check", k4, "--algo", "shortest-path", "--axiom", "path-cardinal-invariance"}).code == kExitUsage);
}

TEST_CASE("suite") {
    Run ok = cli({"suite", "weakest-link", "1,2,3,4d,7", "--graphs", "20", "--unicyclic-graphs", "10", "--seed", "1"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.err.find("weakest-link path-ordinal-invariance") != std::string::npos);
    Run bad = cli({"suite", "max-spanning-tree", "4", "--graphs", "20", "--unicyclic-graphs", "5", "--seed", "1"});
    CHECK(bad.code == kExitViolations);
    CHECK(cli({"suite", "mst", "1,9"}).code == kExitUsage);
    CHECK(cli({"suite", "mst", "1", "--graphs"}).code == kExitUsage);
    CHECK(cli({"suite", "mst", "1", "--weights", "int", "--lo", "1", "--hi", "3"}).code == kExitUsage);

    const std::string json = (std::filesystem::temp_directory_path() / "routelab_cli_suite.json").string();
    Run to_file = cli({"suite", "mst", "1,2", "--graphs", "10", "--unicyclic-graphs", "0", "--json", json});
    CHECK(to_file.code == kExitOk);
    CHECK(to_file.out.empty());
    CHECK(read_file(json).find("\"axiom\": \"robustness\"") != std::string::npos);
}

TEST_CASE("gen") {
    Run a = cli({"gen", "--nodes", "2", "--seed", "4"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("p route 2 1 ") == 0);
    CHECK(cli({"gen", "--seed", "9", "--index", "3"}).out == cli({"gen", "--seed", "9", "--index", "3"}).out);
    Run tri = cli({"gen", "--nodes", "3", "--unicyclic"});
    CHECK(tri.out.find("p route 3 3 ") == 0);
    CHECK(cli({"gen", "--nodes", "2", "--unicyclic"}).code == kExitUsage);
    CHECK(cli({"gen", "--density", "0"}).code == kExitUsage);
}

TEST_CASE("oracle-verify") {
    CHECK(cli({"oracle-verify", temp_file("tri.txt", kTri), "--algo", "mst"}).out == "PASS mst MIN_TOTAL\n");
    Run wl = cli({"oracle-verify", temp_file("wl.txt", kWl), "--algo", "weakest-link"});
    CHECK(wl.code == kExitOk);
    CHECK(wl.out == "PASS weakest-link MAXIMIN_ALL\n");
    std::string big = "p route 20 19 0\n";
    for (int v = 1; v < 20; ++v) big += "e 0 " + std::to_string(v) + " " + std::to_string(v) + "\n";
    CHECK(cli({"oracle-verify", temp_file("big.txt", big), "--algo", "mst"}).code == kExitUsage);
    CHECK(cli({"oracle-verify", temp_file("tri.txt", kTri), "--algo", "longest-path"}).code == kExitUsage);
}

TEST_CASE("tightness") {
    Run r = cli({"tightness", "mst", "--drop", "first-hop"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"status\": \"CONFIRMED\"") != std::string::npos);
    CHECK(r.err.find("CONFIRMED") != std::string::npos);
    CHECK(cli({"tightness", "mst", "--drop", "monotonicity"}).code == kExitOk);
    CHECK(cli({"tightness", "shortest-path", "--drop", "first-hop"}).code == kExitUsage);
    CHECK(cli({"tightness", "mst"}).code == kExitUsage);
    CHECK(cli({"tightness", "mst", "--drop", "1", "--all"}).code == kExitUsage);
}

TEST_CASE("usage errors and help") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
}
