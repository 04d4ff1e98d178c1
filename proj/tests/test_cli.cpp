#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "madfc/cli.hpp"
#include "madfc/table.hpp"
#include "madfc/text.hpp"
#include "test_support.hpp"

using namespace madfc;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "madfc_cli_test";
    fs::create_directories(dir);
    return dir;
}

int count_warnings(const std::string& err) {
    int n = 0;
    size_t pos = 0;
    while ((pos = err.find("warning:", pos)) != std::string::npos) {
        ++n;
        pos += 8;
    }
    return n;
}

}  // namespace

TEST_CASE("transform prints the coordinate") {
    CliResult r = run({"transform", "--value", "0.25", "--scale", "madfc"});
    CHECK(r.code == 0);
    CHECK(r.out == "-3\n");
    CHECK(r.err.empty());

    CHECK(run({"transform", "--value", "0.25"}).out == "-3\n");  // madfc is the default
    CHECK(run({"transform", "--value", "8", "--scale", "log2"}).out == "3\n");
    CHECK(run({"transform", "--value", "0.5", "--scale", "linear"}).out == "0.5\n");
}

TEST_CASE("inverse prints the fold change") {
    CliResult r = run({"inverse", "--value", "0", "--scale", "madfc"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(run({"inverse", "--value", "-3", "--scale", "log2"}).out == "0.125\n");
}

TEST_CASE("transform then inverse round-trips through printed text") {
    for (const char* scale : {"log2", "linear", "madfc"}) {
        for (double value : {0.37, 1.0, 2.5, 117.0}) {
            CliResult fwd = run({"transform", "--value", shortest_repr(value), "--scale", scale});
            REQUIRE(fwd.code == 0);
            std::string coordinate = fwd.out.substr(0, fwd.out.size() - 1);
            CliResult back = run({"inverse", "--value", coordinate, "--scale", scale});
            REQUIRE(back.code == 0);
            double recovered = std::strtod(back.out.c_str(), nullptr);
            CHECK(std::fabs(recovered - value) <= 1e-12 * value);
        }
    }
}

TEST_CASE("domain errors exit 1 and name the offending value") {
    CliResult r = run({"transform", "--value", "-2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("-2") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"transform", "--value", "2", "--scale", "log10"}).code == 2);
    CHECK(run({"transform"}).code == 2);          // missing required flag
    CHECK(run({"frobnicate"}).code == 2);         // unknown subcommand
    CHECK(run({}).code == 2);                     // subcommand required
    CHECK(run({"plot", "spiral", "--input", "x", "--out", "y"}).code == 2);
}

TEST_CASE("help exits 0 and documents flags") {
    CliResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("transform") != std::string::npos);
    for (const char* sub : {"transform", "inverse", "ticks", "plot", "simulate"}) {
        CliResult r = run({sub, "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("--") != std::string::npos);
    }
    CHECK(run({"plot", "--help"}).out.find("--scale") != std::string::npos);
}

TEST_CASE("ticks prints the position/label table") {
    CliResult r = run({"ticks", "--min", "0.25", "--max", "4", "--scale", "madfc",
                       "--format", "fraction"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "-3\t1/4\n-2\t1/3\n-1\t1/2\n0\t1\n1\t2\n2\t3\n3\t4\n");
}

TEST_CASE("plot reports missing input with exit 1") {
    fs::path out = temp_dir() / "missing.svg";
    CliResult r = run({"plot", "volcano", "--input", "definitely_missing.csv", "--out",
                       out.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("definitely_missing.csv") != std::string::npos);
}

TEST_CASE("plot renders every chart kind end to end") {
    fs::path dir = temp_dir();
    const std::string de = testsupport::fixture_path("de_example.csv");
    const std::string matrix = testsupport::fixture_path("expression_example.csv");
    const std::string heat = testsupport::fixture_path("heatmap_example.csv");

    fs::path fig4 = dir / "fig4a.csv";
    fs::path fig5 = dir / "fig5a.csv";
    fs::path fig6 = dir / "fig6a.csv";
    CHECK(run({"simulate", "fig4a", "--out", fig4.string()}).code == 0);
    CHECK(run({"simulate", "fig5a", "--out", fig5.string()}).code == 0);
    CHECK(run({"simulate", "fig6a", "--seed", "3", "--out", fig6.string()}).code == 0);

    auto plot_ok = [&](const std::string& kind, const std::string& input) {
        fs::path out = dir / (kind + ".svg");
        CliResult r = run({"plot", kind, "--input", input, "--out", out.string()});
        CHECK(r.code == 0);
        const std::string svg = testsupport::slurp(out.string());
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    };
    plot_ok("volcano", de);
    plot_ok("ma", de);
    plot_ok("errorbar", fig4.string());
    plot_ok("box", fig5.string());      // five-number table input
    plot_ok("box", matrix);             // expression matrix input
    plot_ok("violin", fig6.string());
    plot_ok("heatmap", heat);
}

TEST_CASE("plot accepts a custom delimiter") {
    fs::path dir = temp_dir();
    fs::path input = dir / "semi.csv";
    testsupport::spit(input.string(), "id;fc;pvalue;basemean\ng1;2;0.01;10\n");
    fs::path out = dir / "semi.svg";
    CliResult r = run({"plot", "volcano", "--input", input.string(), "--out", out.string(),
                       "--delimiter", ";"});
    CHECK(r.code == 0);
    CHECK(run({"plot", "volcano", "--input", input.string(), "--out", out.string(),
               "--delimiter", ";;"}).code == 2);
}

TEST_CASE("plot supports the log2fc column mode") {
    fs::path dir = temp_dir();
    fs::path input = dir / "log2fc.csv";
    testsupport::spit(input.string(), "id,log2fc,pvalue,basemean\ng1,1,0.01,10\ng2,-2,0.5,5\n");
    fs::path out = dir / "log2fc.svg";
    CliResult r = run({"plot", "ma", "--input", input.string(), "--out", out.string(),
                       "--fc-column-mode", "log2fc"});
    CHECK(r.code == 0);
}

TEST_CASE("repeated plot and simulate runs are byte-identical") {
    fs::path dir = temp_dir();
    fs::path a = dir / "det_a.svg", b = dir / "det_b.svg";
    const std::string de = testsupport::fixture_path("de_example.csv");
    REQUIRE(run({"plot", "volcano", "--input", de, "--out", a.string()}).code == 0);
    REQUIRE(run({"plot", "volcano", "--input", de, "--out", b.string()}).code == 0);
    CHECK(testsupport::slurp(a.string()) == testsupport::slurp(b.string()));

    fs::path sa = dir / "det_a.csv", sb = dir / "det_b.csv";
    REQUIRE(run({"simulate", "fig6a", "--seed", "9", "--out", sa.string()}).code == 0);
    REQUIRE(run({"simulate", "fig6a", "--seed", "9", "--out", sb.string()}).code == 0);
    CHECK(testsupport::slurp(sa.string()) == testsupport::slurp(sb.string()));
}

TEST_CASE("dynamic range warning fires once past the threshold") {
    fs::path dir = temp_dir();
    fs::path big = dir / "big.csv";
    testsupport::spit(big.string(),
                      "id,fc,pvalue,basemean\ng1,1000,0.01,10\ng2,2000,0.02,10\ng3,2,0.5,10\n");
    fs::path small = dir / "small.csv";
    testsupport::spit(small.string(), "id,fc,pvalue,basemean\ng1,50,0.01,10\n");

    CliResult loud = run({"plot", "volcano", "--input", big.string(), "--out",
                          (dir / "big.svg").string()});
    CHECK(loud.code == 0);
    CHECK(count_warnings(loud.err) == 1);
    CHECK(loud.err.find("dynamic range") != std::string::npos);

    CliResult quiet = run({"plot", "volcano", "--input", small.string(), "--out",
                           (dir / "small.svg").string()});
    CHECK(quiet.code == 0);
    CHECK(count_warnings(quiet.err) == 0);
}

TEST_CASE("parse errors from plot inputs exit 1 with location") {
    fs::path dir = temp_dir();
    fs::path bad = dir / "bad.csv";
    testsupport::spit(bad.string(), "id,fc,pvalue,basemean\ng1,-1,0.01,10\n");
    CliResult r = run({"plot", "volcano", "--input", bad.string(), "--out",
                       (dir / "bad.svg").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("row 2") != std::string::npos);
}

TEST_CASE("simulate writes loadable datasets with figure defaults") {
    fs::path dir = temp_dir();
    fs::path fig5 = dir / "check5.csv";
    REQUIRE(run({"simulate", "fig5a", "--out", fig5.string()}).code == 0);
    auto boxes = parse_five_number_summaries(testsupport::slurp(fig5.string()));
    CHECK(boxes.size() == 9);

    fs::path fig4 = dir / "check4.csv";
    REQUIRE(run({"simulate", "fig4a", "--groups", "7", "--out", fig4.string()}).code == 0);
    CHECK(parse_group_summaries(testsupport::slurp(fig4.string())).size() == 7);
}
