#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = trop::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: membership queries") {
    auto r = run_cli({"member", "--ideal", "lattice2:2Z", "--support", "0 2"});
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "true\n");
    auto f = run_cli({"member", "--ideal", "lattice2:2Z", "--support", "0 1 2"});
    REQUIRE(f.status == 0);
    REQUIRE(f.out == "false\n");
}

TEST_CASE("cli: hnf emits canonical form regardless of generators") {
    auto a = run_cli({"hnf", "--in", "[[2,0],[0,2],[2,2]]"});
    auto b = run_cli({"hnf", "--in", "[[0,2],[2,0]]"});
    REQUIRE(a.status == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out == "lattice 2 2\n2 0\n0 2\n");
}

TEST_CASE("cli: snf") {
    auto r = run_cli({"snf", "--in", "[[4,0,0],[0,2,0],[0,0,2]]"});
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("invariant_factors 2 2 4") != std::string::npos);
    REQUIRE(r.out.find("order 16") != std::string::npos);
    auto j = run_cli({"--json", "snf", "--in", "2Z"});
    REQUIRE(j.status == 0);
    REQUIRE(j.out.find("\"free_rank\": 0") != std::string::npos);
}

TEST_CASE("cli: usage and validation errors") {
    REQUIRE(run_cli({"bogus-subcommand"}).status == 1);
    REQUIRE(run_cli({}).status == 1);
    REQUIRE(run_cli({"member", "--ideal", "lattice2:[[1,0],[0,1]]", "--support", "0 0"}).status ==
            2);  // full lattice is not a proper sublattice
    REQUIRE(run_cli({"degree", "--ideal", "no-such-file"}).status == 2);
}

TEST_CASE("cli: resource limits map to exit 4") {
    auto r = run_cli({"--max-window-points", "10", "circuits", "--ideal", "lattice2:2Z", "--box",
                      "0", "100"});
    REQUIRE(r.status == 4);
}

TEST_CASE("cli: verify-window on shipped literals") {
    auto r = run_cli({"verify-window", "--ideal", "mpower:2:0..5", "--box", "-5", "6"});
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("all-passed") != std::string::npos);
}

TEST_CASE("cli: degree with confirmation") {
    auto r = run_cli({"degree", "--ideal", "uniform:1:2", "--box", "0", "10"});
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("degree 3") != std::string::npos);
    REQUIRE(r.out.find("window_confirms true") != std::string::npos);
}

TEST_CASE("cli: restrict-vars reproduces the section lattices") {
    auto r1 = run_cli({"restrict-vars", "--ideal", "lattice2:[[4,0,0],[0,2,0],[0,0,2]]", "--axes",
                       "1"});
    REQUIRE(r1.status == 0);
    REQUIRE(r1.out == "ideal lattice2 1\nlattice 1 1\n4\n");
    auto r23 = run_cli({"restrict-vars", "--ideal", "lattice2:[[4,0,0],[0,2,0],[0,0,2]]", "--axes",
                        "2,3"});
    REQUIRE(r23.status == 0);
    REQUIRE(r23.out == "ideal lattice2 2\nlattice 2 2\n2 0\n0 2\n");
}

TEST_CASE("cli: example outputs re-parse (round trip through the tool)") {
    for (const char* name : {"m-power", "non-pappus", "remark-d3", "lattice-deg2", "uniform"}) {
        auto r = run_cli({"example", name});
        REQUIRE(r.status == 0);
        REQUIRE_FALSE(r.out.empty());
    }
    // emitted ideal text is accepted back as an --ideal file
    auto ideal_text = run_cli({"example", "m-power"});
    std::string path = "/tmp/tropideal_test_mpower.txt";
    {
        std::ofstream f(path);
        f << ideal_text.out;
    }
    auto deg = run_cli({"degree", "--ideal", path});
    REQUIRE(deg.status == 0);
    REQUIRE(deg.out == "degree 3\n");
}

TEST_CASE("cli: extend-matroid round trip against the shipped matroid") {
    auto ideal = run_cli({"extend-matroid", "--matroid", "nonpappus", "--embedding", "pow2"});
    REQUIRE(ideal.status == 0);
    std::string ipath = "/tmp/tropideal_test_ext.txt";
    {
        std::ofstream f(ipath);
        f << ideal.out;
    }
    auto restricted = run_cli({"restrict-window", "--ideal", ipath, "--points",
                               "1 2 4 8 16 32 64 128 256"});
    REQUIRE(restricted.status == 0);
    REQUIRE(restricted.out.find("matroid 9 3") != std::string::npos);
    auto expected = run_cli({"example", "non-pappus"});
    // both carry exactly the eight 3-point lines as 3-element circuits
    auto count_lines3 = [](const std::string& text) {
        int c = 0;
        std::istringstream is(text);
        std::string line;
        bool in_circuits = false;
        while (std::getline(is, line)) {
            if (line.rfind("circuits", 0) == 0) in_circuits = true;
            else if (in_circuits && line.rfind("3 ", 0) == 0) ++c;
        }
        return c;
    };
    REQUIRE(count_lines3(restricted.out) == 8);
    REQUIRE(count_lines3(expected.out) == 8);
}

TEST_CASE("cli: realize-search expectations") {
    REQUIRE(run_cli({"realize-search", "--target", "4Z", "--gf", "2", "--expect", "none"}).status ==
            0);
    REQUIRE(run_cli({"realize-search", "--target", "4Z", "--gf", "3", "--expect", "none"}).status ==
            3);
    auto j = run_cli({"--json", "realize-search", "--target", "4Z", "--gf", "3"});
    REQUIRE(j.status == 0);
    REQUIRE(j.out.find("\"witness_count\": 2") != std::string::npos);
}

TEST_CASE("cli: check-gens on a corrupted partition file") {
    std::string path = "/tmp/tropideal_test_badgens.txt";
    {
        std::ofstream f(path);
        f << "dpartition 1 2 2\nfinite 3\n0\n1\n2\nfinite 3\n0\n1\n3\n";
    }
    auto r = run_cli({"check-gens", "--in", path});
    REQUIRE(r.status == 2);
    REQUIRE(r.out.find("violation A3") != std::string::npos);
    std::string good = "/tmp/tropideal_test_goodgens.txt";
    {
        std::ofstream f(good);
        f << "dpartition 1 2 1\nfinite 3\n1\n2\n4\n";
    }
    REQUIRE(run_cli({"check-gens", "--in", good}).status == 0);
}

TEST_CASE("cli: prop46 exits clean") {
    auto r = run_cli({"prop46"});
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("all-match") != std::string::npos);
}

TEST_CASE("cli: byte-identical output across runs") {
    for (int i = 0; i < 3; ++i) {
        auto a = run_cli({"circuits", "--ideal", "mpower:2:0..3", "--box", "-4", "9"});
        auto b = run_cli({"circuits", "--ideal", "mpower:2:0..3", "--box", "-4", "9"});
        REQUIRE(a.out == b.out);
    }
}
