#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixig/cli.hpp"

using namespace fixig;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("fix subcommand on a family") {
    CliRun r = run({"fix", "--family", "complete:4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fix=3") != std::string::npos);
    CHECK(r.out.find("witness=0 1 2") != std::string::npos);
    CHECK(r.out.find("aut_order=24") != std::string::npos);
}

TEST_CASE("fix of a functigraph via build piping") {
    CliRun build = run({"build", "--family", "path:3", "--function", "0 0 2"});
    REQUIRE(build.code == 0);
    CHECK(build.out.substr(0, 3) == "6 7");
    // the stated sharpness function is not rigid: fix = 1 (see claim suite)
    CliRun fix = run({"fix"}, build.out);
    CHECK(fix.code == 0);
    CHECK(fix.out.find("fix=1") != std::string::npos);

    // the corrected function gives the rigid functigraph
    CliRun fix0 = run({"fix", "--family", "path:3", "--function", "0 0 1"});
    CHECK(fix0.code == 0);
    CHECK(fix0.out.find("fix=0") != std::string::npos);
}

TEST_CASE("json output modes") {
    CliRun r = run({"fix", "--family", "complete:4", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"aut_order\":24,\"fix\":3,\"lower_bound\":3,\"witness\":[0,1,2]}\n");

    CliRun aut = run({"aut", "--family", "cycle:4", "--json"});
    CHECK(aut.code == 0);
    CHECK(aut.out.find("\"order\":8") != std::string::npos);

    CliRun mdim = run({"mdim", "--family", "path:4", "--json"});
    CHECK(mdim.code == 0);
    CHECK(mdim.out == "{\"beta\":1,\"witness\":[0]}\n");
}

TEST_CASE("catalog and functigraph options") {
    CliRun r = run({"fix", "--catalog", "lemma_fff_even:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fix=2") != std::string::npos);

    CliRun menu = run({"fix", "--family", "complete:4", "--catalog", "f112_menu:4,2,1"});
    CHECK(menu.code == 0);
    CHECK(menu.out.find("fix=3") != std::string::npos);
}

TEST_CASE("predictors") {
    CliRun kn = run({"predict", "--predictor", "kn", "--n", "5", "--profile", "3,2"});
    CHECK(kn.code == 0);
    CHECK(kn.out == "predicted=5\n");

    CliRun m = run({"predict", "--predictor", "matching", "--n", "7", "--i", "3", "--image",
                    "saturated"});
    CHECK(m.code == 0);
    CHECK(m.out == "predicted=6\n");

    CliRun eq = run({"predict", "--predictor", "equality", "--s", "3"});
    CHECK(eq.code == 0);
    CHECK(eq.out == "orders=5 6\n");

    CHECK(run({"predict", "--predictor", "bogus"}).code == 2);
    CHECK(run({"predict", "--predictor", "kn", "--n", "5"}).code == 2);
}

TEST_CASE("verify exit codes and output") {
    CliRun ok = run({"verify", "--suite", "lem-realize", "--max-n", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[PASS] lem-realize") != std::string::npos);
    CHECK(ok.out.find("summary: pass=2 fail=0 skip=0") != std::string::npos);

    // the stated sharp-lower instance fails honestly, so the suite exits 1
    CliRun defect = run({"verify", "--suite", "prop-2.5-sharp-lower"});
    CHECK(defect.code == 1);
    CHECK(defect.out.find("[FAIL] prop-2.5-sharp-lower") != std::string::npos);
    CHECK(defect.out.find("counterexample") != std::string::npos);

    CliRun jsonl = run({"verify", "--suite", "lem-sum", "--max-n", "3", "--json"});
    CHECK(jsonl.code == 0);
    CHECK(jsonl.out.find("{\"claim\":\"lem-sum\"") != std::string::npos);
    CHECK(jsonl.out.find("\"summary\"") != std::string::npos);

    CHECK(run({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE("verify output is byte-stable across runs") {
    std::vector<std::string> args{"verify", "--suite", "thm-3.1", "--max-n", "5", "--json"};
    CliRun a = run(args);
    CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("worker count does not change verify output") {
    CliRun serial = run({"verify", "--suite", "thm-3.1", "--max-n", "5", "--json"});
    CliRun parallel = run({"verify", "--suite", "thm-3.1", "--max-n", "5", "--json", "--jobs", "4"});
    CHECK(serial.code == parallel.code);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("graph file input and aut element listing") {
    std::string path = "/tmp/fixig_test_graph.txt";
    {
        std::ofstream f(path);
        f << "# C_4\n4 4\n0 1\n1 2\n2 3\n0 3\n";
    }
    CliRun r = run({"aut", "--graph", path, "--elements"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order=8") != std::string::npos);
    int element_lines = 0;
    bool in_elements = false;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line == "elements:") in_elements = true;
        else if (in_elements) ++element_lines;
    }
    CHECK(element_lines == 8);
    CHECK(run({"fix", "--graph", "/tmp/no_such_file_here.txt"}).code == 2);
}

TEST_CASE("enumerate subcommands") {
    CliRun graphs = run({"enumerate", "graphs", "--n", "3"});
    CHECK(graphs.code == 0);
    CHECK(graphs.out.find("# 4/4") != std::string::npos);

    CliRun fns = run({"enumerate", "functions", "--family", "path:2", "--json"});
    CHECK(fns.code == 0);
    CHECK(fns.out.find("\"functions\":4") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"fix", "--family", "banana:1"}).code == 2);
    CHECK(run({"fix", "--family", "path:3", "--graph", "x.txt"}).code == 2);

    CliRun bad = run({"fix"}, "this is not a graph\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1") != std::string::npos);
}

TEST_CASE("cap errors exit 1") {
    CliRun r = run({"fix", "--family", "complete:12", "--max-elements", "1000"});
    CHECK(r.code == 1);
    CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("disconnected input gets a diagnostic note") {
    CliRun r = run({"fix", "--family", "union(path:2,path:2)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fix=2") != std::string::npos);
    CHECK(r.err.find("disconnected") != std::string::npos);
}
