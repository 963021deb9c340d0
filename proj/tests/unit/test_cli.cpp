#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "minell/cli.hpp"

using namespace minell;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("hj subcommand") {
    CliResult r = run({"hj", "9/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("expansion: [5,2]") != std::string::npos);
    CHECK(r.out.find("multiplicity: 5") != std::string::npos);
    CHECK(r.out.find("embedding dimension: 6") != std::string::npos);
    CHECK(r.out.find("ell: 2") != std::string::npos);
    CHECK(r.out.find("wahl: n=3 q=1") != std::string::npos);
    CHECK(r.err.empty());

    r = run({"hj", "4/1"});
    CHECK(r.out.find("artin: t=4 artin=3 non-artin=1") != std::string::npos);

    r = run({"hj", "6/3"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("classify from stdin and exit codes") {
    CliResult r = run({"classify", "-"}, "vertex a weight=-2\nvertex b weight=-5\nedge a b mult=2\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("class: Cu(2,5)") != std::string::npos);
    CHECK(r.out.find("degree: 3") != std::string::npos);

    // not negative definite -> 2
    r = run({"classify", "-"}, "vertex a weight=-2\nvertex b weight=-2\nedge a b mult=2\n");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("negative definite") != std::string::npos);

    // malformed -> 1 with a line number
    r = run({"classify", "-"}, "vertex a weight=-2\nedge a zz\n");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("line 2") != std::string::npos);

    r = run({"classify", "/no/such/file.graph"});
    CHECK(r.code == 1);
}

TEST_CASE("classify matches the golden corpus byte for byte") {
    const fs::path data_dir{MINELL_DATA_DIR};
    std::vector<fs::path> graphs;
    for (const auto& entry : fs::directory_iterator(data_dir / "graphs"))
        if (entry.path().extension() == ".graph") graphs.push_back(entry.path());
    std::sort(graphs.begin(), graphs.end());
    REQUIRE(graphs.size() >= 10);
    for (const fs::path& g : graphs) {
        CAPTURE(g.string());
        CliResult r = run({"classify", g.string(), "--json"});
        REQUIRE(r.code == 0);
        fs::path golden = data_dir / "golden" / (g.stem().string() + ".json");
        REQUIRE(fs::exists(golden));
        REQUIRE(r.out == slurp(golden));
        // byte-stable across runs
        CliResult again = run({"classify", g.string(), "--json"});
        REQUIRE(again.out == r.out);
    }
}

TEST_CASE("cycle subcommand") {
    CliResult r = run({"cycle", "-"},
                      "vertex c weight=-1\nvertex a1 weight=-2\nvertex a2 weight=-3\n"
                      "vertex a3 weight=-7\nedge c a1\nedge c a2\nedge c a3\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("fundamental cycle: c=6 a1=3 a2=2 a3=1") != std::string::npos);
    CHECK(r.out.find("Z.Z: -1") != std::string::npos);
    CHECK(r.out.find("chi(Z): 0") != std::string::npos);
    CHECK(r.out.find("singular points: 3") != std::string::npos);
}

TEST_CASE("moves subcommand") {
    CliResult r = run({"moves", "Cu(2,5)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Cu(2,5) -> Cu(3)") != std::string::npos);

    r = run({"moves", "Cu(4,5)", "--chains", "[4]"});
    CHECK(r.out.find("El(4)") != std::string::npos);

    r = run({"moves", "Cu(5,[4])"});
    CHECK(r.out.find("wahl-el") != std::string::npos);

    r = run({"moves", "El(7)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("moves: 0") != std::string::npos);

    r = run({"moves", "Cu(2,2)"});
    CHECK(r.code == 1);

    r = run({"moves", "Cu(3,[4],5,[5,2],6)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("note: 2 chains marked") != std::string::npos);
}

TEST_CASE("reach subcommand and exit code 3") {
    CliResult r = run({"reach", "Cu(2,5)", "Cu(3)", "--max-steps", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("path: 1 steps") != std::string::npos);

    r = run({"reach", "El(3)", "Cu(3)", "--max-steps", "5"});
    CHECK(r.code == 3);
    CHECK(r.out == "none\n");
    CHECK(r.err.empty());

    r = run({"reach", "El(3)", "Cu(3)", "--max-steps", "5", "--json"});
    CHECK(r.code == 3);
    CHECK(r.out.find("\"reachable\": false") != std::string::npos);

    r = run({"reach", "Tr(3,3,3)", "El(3)", "--max-steps", "4", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"steps\": 4") != std::string::npos);
}

TEST_CASE("dag subcommand writes deterministic files") {
    const fs::path tmp = fs::temp_directory_path() / "minell_cli_test";
    fs::create_directories(tmp);
    auto dot1 = (tmp / "a.dot").string(), json1 = (tmp / "a.json").string();
    auto dot2 = (tmp / "b.dot").string(), json2 = (tmp / "b.json").string();
    CliResult r1 = run({"dag", "--max-degree", "4", "--max-length", "3", "--chains", "[4]",
                        "--dot", dot1, "--json", json1});
    CliResult r2 = run({"dag", "--max-degree", "4", "--max-length", "3", "--chains", "[4]",
                        "--dot", dot2, "--json", json2});
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(slurp(dot1) == slurp(dot2));
    CHECK(slurp(json1) == slurp(json2));
    CHECK(slurp(dot1).find("digraph") == 0);
    fs::remove_all(tmp);
}

TEST_CASE("quotient subcommand emits both graphs in graph text") {
    CliResult r = run({"quotient", "z2", "--cusp", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# cover\n") != std::string::npos);
    CHECK(r.out.find("vertex u weight=-2") != std::string::npos);
    CHECK(r.out.find("edge u v mult=2") != std::string::npos);
    CHECK(r.out.find("# cover class: Cu(2,4), degree 2") != std::string::npos);
    CHECK(r.out.find("# quotient class: Unknown(") != std::string::npos);
    CHECK(r.out.find("minimally elliptic: no") != std::string::npos);

    r = run({"quotient", "z2", "--cusp", "2,2"});
    CHECK(r.code == 1);
}

TEST_CASE("fixtures subcommand") {
    CliResult r = run({"fixtures", "mu3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Cu(2,5)") != std::string::npos);
    CHECK(r.out.find("dim T^1 = 18") != std::string::npos);
    CHECK(r.out.find("verification: ok") != std::string::npos);

    r = run({"fixtures", "mu3", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verified\": true") != std::string::npos);
    CliResult again = run({"fixtures", "mu3", "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("bad invocations") {
    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"reach", "Cu(2,5)", "Cu(3)"}).code != 0);  // missing --max-steps
}
