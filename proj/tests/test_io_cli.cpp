#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccpair/cli.hpp"
#include "ccpair/io.hpp"
#include "test_helpers.hpp"

using namespace ccpair;
using namespace ccpair::testing;

namespace {

std::string data_path(const std::string& rel) { return std::string(CCPAIR_DATA_DIR) + "/" + rel; }

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "ccpair_test";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("matrix files: parse, comments, validation") {
    std::istringstream good("# a comment\n2^1 3 1\n# another\n1 1 1\n");
    LinearCode rep = parse_matrix(good);
    CHECK(rep == repetition_code(3));

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_matrix(empty), Error);

    std::istringstream short_row("2^1 3 1\n1 1\n");
    CHECK_THROWS_AS(parse_matrix(short_row), Error);

    std::istringstream extra("2^1 2 1\n1 1 1\n");
    CHECK_THROWS_AS(parse_matrix(extra), Error);

    std::istringstream out_of_range("2^1 2 1\n1 2\n");
    CHECK_THROWS_AS(parse_matrix(out_of_range), Error);

    std::istringstream dependent("2^1 3 2\n1 1 0\n1 1 0\n");
    CHECK_THROWS_AS(parse_matrix(dependent), Error);

    // Round trip through the writer.
    std::ostringstream sink;
    write_matrix(sink, hamming74(), "hamming");
    std::istringstream back(sink.str());
    CHECK(parse_matrix(back) == hamming74());
}

TEST_CASE("bundled data files match the built-in catalog") {
    CHECK(load_pair_bundle(data_path("pairs/steane.json")).pair.c1() == hamming74());
    CHECK(load_pair_bundle(data_path("pairs/four_two.json")).pair.c1() == even_weight_code(4));
    CHECK(load_pair_bundle(data_path("pairs/trivial1.json")).pair.k() == 1);

    PairBundle gf4 = load_pair_bundle(data_path("pairs/gf4_selfdual.json"));
    CHECK(gf4.pair.field().order() == 4);
    ConjugatePair expanded = expand_pair(gf4.pair);
    PairBundle shipped = load_pair_bundle(data_path("pairs/gf4_selfdual_expanded.json"));
    CHECK(expanded.c1() == shipped.pair.c1());
    CHECK(expanded.c2() == shipped.pair.c2());
}

TEST_CASE("pair bundle write/load round trip") {
    auto dir = temp_dir() / "bundle_rt";
    std::string manifest = write_pair_bundle(dir.string(), "steane_copy", steane_pair());
    PairBundle p = load_pair_bundle(manifest);
    CHECK(p.name == "steane_copy");
    CHECK(p.pair.c1() == hamming74());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli verify: valid pair exits 0, invalid exits 1, usage exits 2") {
    CliResult ok = cli({"verify", "--pair", data_path("pairs/steane.json")});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"k\": 1") != std::string::npos);

    // Build a NotConjugate bundle: repetition [3,1] for both codes.
    auto dir = temp_dir() / "bad_pair";
    std::filesystem::create_directories(dir);
    {
        std::ofstream m(dir / "rep.mat");
        m << "2^1 3 1\n1 1 1\n";
        std::ofstream j(dir / "bad.json");
        j << R"({"name":"bad","field":"2^1","n":3,"c1":"rep.mat","c2":"rep.mat"})";
    }
    CliResult bad = cli({"verify", "--pair", (dir / "bad.json").string()});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("NotConjugate") != std::string::npos);
    std::filesystem::remove_all(dir);

    CliResult usage = cli({"verify"});
    CHECK(usage.exit_code == 2);
    CliResult unknown_flag = cli({"verify", "--pair", "x", "--bogus"});
    CHECK(unknown_flag.exit_code == 2);
    CliResult no_sub = cli({});
    CHECK(no_sub.exit_code == 2);
}

TEST_CASE("cli simulate: reports are byte-identical for a fixed seed") {
    std::vector<std::string> args = {"simulate", "--pair",  data_path("pairs/four_two.json"),
                                     "--channel", "depolarizing:0.1", "--trials", "2000",
                                     "--seed",    "777"};
    CliResult a = cli(args);
    CliResult b = cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> args2 = args;
    args2.back() = "778";
    CliResult c = cli(args2);
    CHECK(a.out != c.out);
}

TEST_CASE("cli simulate: csv rows accumulate") {
    auto csv = temp_dir() / "rows.csv";
    std::filesystem::remove(csv);
    for (const char* seed : {"1", "2"}) {
        CliResult r = cli({"simulate", "--pair", data_path("pairs/trivial1.json"), "--channel",
                           "depolarizing:0.2", "--trials", "100", "--seed", seed, "--csv",
                           csv.string()});
        REQUIRE(r.exit_code == 0);
    }
    std::ifstream in(csv);
    std::string line;
    size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3); // header + two rows
    std::filesystem::remove(csv);
}

TEST_CASE("cli expand writes a loadable bundle and rejects prime fields") {
    auto dir = temp_dir() / "expand_out";
    std::filesystem::remove_all(dir);
    CliResult r = cli({"expand", "--pair", data_path("pairs/gf4_selfdual.json"), "--out",
                       dir.string()});
    REQUIRE(r.exit_code == 0);
    PairBundle expanded = load_pair_bundle((dir / "gf4_selfdual_expanded.json").string());
    CHECK(expanded.pair.n() == 4);
    CHECK(expanded.pair.field().spec() == "2^1");
    std::filesystem::remove_all(dir);

    CliResult bad = cli({"expand", "--pair", data_path("pairs/steane.json"), "--out", dir.string()});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("cli encode-demo round trips") {
    CliResult r = cli({"encode-demo", "--pair", data_path("pairs/steane.json"), "--message", "1",
                       "--seed", "5"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"roundtrip_ok\": true") != std::string::npos);

    CliResult out_of_range =
        cli({"encode-demo", "--pair", data_path("pairs/steane.json"), "--message", "2"});
    CHECK(out_of_range.exit_code == 1);
    CHECK(out_of_range.out.find("InvalidMessage") != std::string::npos);
}

TEST_CASE("cli fidelity and bounds emit the accounting fields") {
    CliResult f = cli({"fidelity", "--pair", data_path("pairs/four_two.json"), "--channel",
                       "independent-xz:0.05,0.02"});
    REQUIRE(f.exit_code == 0);
    CHECK(f.out.find("\"one_minus_ef\"") != std::string::npos);
    CHECK(f.out.find("\"equality_ok\": true") != std::string::npos);

    CliResult b = cli({"bounds", "--fidelity", "1.0", "--n", "7", "--rate", "0.142857", "--q", "2"});
    REQUIRE(b.exit_code == 0);
    CHECK(b.out.find("\"leakage_bound_bits\": 0.0") != std::string::npos);

    CliResult dom = cli({"bounds", "--fidelity", "1.5", "--n", "7", "--rate", "0.14"});
    CHECK(dom.exit_code == 1);
    CHECK(dom.out.find("DomainError") != std::string::npos);
}

TEST_CASE("cli max-dim cap turns into a TooLarge error") {
    CliResult r = cli({"fidelity", "--pair", data_path("pairs/steane.json"), "--channel",
                       "depolarizing:0.01", "--max-dim", "16"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("TooLarge") != std::string::npos);
}

TEST_CASE("cli help exits 0") {
    CliResult r = cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("selftest") != std::string::npos);
}
