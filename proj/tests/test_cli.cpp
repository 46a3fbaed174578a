#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "moran/frequency.hpp"
#include "moran/measure.hpp"
#include "moran/zero_oracle.hpp"
#include "subprocess.hpp"

using testutil::run;

namespace {
const std::string cli = MORAN_CLI_PATH;
const std::string cfgdir = MORAN_CONFIG_DIR;

std::string cfg(const char* name) { return cfgdir + "/" + name; }
} // namespace

TEST_CASE("classify prints the regime report and honors --expect") {
    auto r = run(cli + " classify -m " + cfg("cantor3.cfg"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("REGIME AtMostM(3)") == 0);
    CHECK(r.output.find("GCD-TABLE") != std::string::npos);
    CHECK(r.output.find("digit=3 gcd-p=1 gcd-q=1 where=period") != std::string::npos);

    CHECK(run(cli + " classify -m " + cfg("cantor3.cfg") + " --expect 'AtMostM(3)'").exit_code == 0);
    CHECK(run(cli + " classify -m " + cfg("cantor3.cfg") + " --expect AtMostM").exit_code == 0);
    CHECK(run(cli + " classify -m " + cfg("cantor3.cfg") + " --expect Spectral 2>/dev/null").exit_code == 1);

    CHECK(run(cli + " classify -m " + cfg("quarter2.cfg") + " --expect Spectral").exit_code == 0);
    CHECK(run(cli + " classify -m " + cfg("p5q7-5.cfg") + " --expect UnboundedFinite").exit_code == 0);

    auto pre = run(cli + " classify -m " + cfg("half-pre2-3.cfg"));
    CHECK(pre.exit_code == 0);
    CHECK(pre.output.find("REGIME AtMostM(3)") == 0);
    CHECK(pre.output.find("where=preperiod") != std::string::npos);
    CHECK(pre.output.find("NOTE preperiod digit 2") != std::string::npos);
}

TEST_CASE("porcelain output is key=value") {
    auto r = run(cli + " --porcelain classify -m " + cfg("half-pre2-3.cfg"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("regime=AtMostM(3)\n") == 0);
    CHECK(r.output.find("bound=3\n") != std::string::npos);
    CHECK(r.output.find("digit.2.gcd_q=2\n") != std::string::npos);
    CHECK(r.output.find("digit.3.where=period\n") != std::string::npos);
    CHECK(r.output.find("note.0=") != std::string::npos);
}

TEST_CASE("member reports witnesses and honors --expect") {
    auto yes = run(cli + " member -m " + cfg("cantor3.cfg") + " --freq 2/3");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output == "VERDICT member\nWITNESS 1/3@1\n");

    auto no = run(cli + " member -m " + cfg("cantor3.cfg") + " --freq 1/3");
    CHECK(no.exit_code == 0);
    CHECK(no.output == "VERDICT non-member\n");

    CHECK(run(cli + " member -m " + cfg("cantor3.cfg") + " --freq 2/3 --expect member").exit_code == 0);
    CHECK(run(cli + " member -m " + cfg("cantor3.cfg") + " --freq 1/3 --expect member 2>/dev/null").exit_code == 1);
    // witness literal round-trips through the zero-form parser
    auto again = run(cli + " member -m " + cfg("cantor3.cfg") + " --freq 1/3@1 --expect member");
    CHECK(again.exit_code == 0);
}

TEST_CASE("check verifies families and reports counterexamples") {
    auto good = run(cli + " check -m " + cfg("cantor3.cfg") + " --family '0, 2/3, 4/3'");
    CHECK(good.exit_code == 0);
    CHECK(good.output == "FAMILY\n0\n2/3\n4/3\nVERDICT orthogonal\n");

    auto bad = run(cli + " check -m " + cfg("cantor3.cfg") + " --family '0, 1/3'");
    CHECK(bad.exit_code == 0);
    CHECK(bad.output.find("VERDICT not-orthogonal\nCOUNTEREXAMPLE 0 1/3\n") != std::string::npos);
    CHECK(run(cli + " check -m " + cfg("cantor3.cfg") + " --family '0, 1/3' --expect orthogonal 2>/dev/null").exit_code == 1);

    // malformed literal is a usage error
    CHECK(run(cli + " check -m " + cfg("cantor3.cfg") + " --family '0, 1/3@0?' 2>/dev/null").exit_code == 2);
}

TEST_CASE("search-max finds the extremal family") {
    auto r = run(cli + " search-max -m " + cfg("cantor3.cfg") + " --n-max 6 --a-max 20 --expect 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("SIZE 3\nVERDICT orthogonal\n") != std::string::npos);
    CHECK(run(cli + " search-max -m " + cfg("cantor3.cfg") +
              " --n-max 6 --a-max 20 --expect 4 2>/dev/null").exit_code == 1);
}

TEST_CASE("constructions verify and their output re-checks") {
    auto l0 = run(cli + " construct-l0 -m " + cfg("sqrt23-57.cfg") + " --expect 7");
    CHECK(l0.exit_code == 0);

    // feed the printed family back into check
    std::istringstream in(l0.output);
    std::string line, family;
    std::getline(in, line); // FAMILY
    REQUIRE(line == "FAMILY");
    while (std::getline(in, line) && line.rfind("SIZE", 0) != 0) {
        if (!family.empty())
            family += ", ";
        family += line;
    }
    auto chk = run(cli + " check -m " + cfg("sqrt23-57.cfg") + " --family '" + family +
                   "' --expect orthogonal");
    CHECK(chk.exit_code == 0);

    auto star = run(cli + " construct-star -m " + cfg("p5q7-5.cfg") + " --alpha 10 --expect 10");
    CHECK(star.exit_code == 0);

    // hypothesis violations exit 1
    CHECK(run(cli + " construct-l0 -m " + cfg("p5q7-5.cfg") + " 2>/dev/null").exit_code == 1);
    CHECK(run(cli + " construct-star -m " + cfg("cantor3.cfg") + " --alpha 3 2>/dev/null").exit_code == 1);
}

TEST_CASE("zeros output re-parses and is deterministic") {
    auto r1 = run(cli + " zeros -m " + cfg("sqrt23-57.cfg") + " --n-max 4 --a-max 8");
    auto r2 = run(cli + " zeros -m " + cfg("sqrt23-57.cfg") + " --n-max 4 --a-max 8");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output); // byte-identical across runs

    auto m = moran::load_measure_config(cfg("sqrt23-57.cfg"));
    std::istringstream in(r1.output);
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        auto f = moran::parse_frequency(m, line);
        CHECK(f.str() == line);
        ++count;
    }
    CHECK(count == moran::enumerate_zeros(m, 4, 8).size());
}

TEST_CASE("sample-ft writes well-formed csv") {
    auto tmp = std::filesystem::temp_directory_path() / "moran_cli_test.csv";
    auto r = run(cli + " sample-ft -m " + cfg("cantor3.cfg") +
                 " --from 0 --to 1 --count 5 --tol 1e-10 --out " + tmp.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(tmp);
    std::string header;
    std::getline(in, header);
    CHECK(header == "xi,re,im,abs,err");
    std::string row;
    std::size_t rows = 0;
    while (std::getline(in, row))
        ++rows;
    CHECK(rows == 5);
    std::filesystem::remove(tmp);

    // stdout mode
    auto direct = run(cli + " sample-ft -m " + cfg("cantor3.cfg") + " --from 0 --to 1 --count 2");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output.rfind("xi,re,im,abs,err\n", 0) == 0);
}

TEST_CASE("precision cap from the environment marks rows failed") {
    auto r = run("MORAN_MAX_PRECISION_BITS=64 " + cli + " sample-ft -m " + cfg("cantor3.cfg") +
                 " --from 0 --to 1 --count 3 --tol 1e-40 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("nan,nan,nan,inf") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run(cli + " 2>/dev/null").exit_code == 2);                          // no subcommand
    CHECK(run(cli + " classify 2>/dev/null").exit_code == 2);                 // missing -m
    CHECK(run(cli + " classify -m /nonexistent.cfg 2>/dev/null").exit_code == 2);
    CHECK(run(cli + " classify -m " + cfg("cantor3.cfg") + " --bogus 2>/dev/null").exit_code == 2);
    CHECK(run(cli + " frobnicate 2>/dev/null").exit_code == 2);
    CHECK(run(cli + " zeros -m " + cfg("cantor3.cfg") + " --n-max 0 2>/dev/null").exit_code == 2);
    // malformed config file
    auto tmp = std::filesystem::temp_directory_path() / "moran_bad.cfg";
    std::ofstream(tmp) << "p=1\nq=2\nr=1\nperiod=[4]\n";
    CHECK(run(cli + " classify -m " + tmp.string() + " 2>/dev/null").exit_code == 2);
    std::filesystem::remove(tmp);

    CHECK(run(cli + " --help >/dev/null").exit_code == 0);
    CHECK(run(cli + " classify --help >/dev/null").exit_code == 0);
}

TEST_CASE("output is byte-identical across repeated runs") {
    for (const char* sub : {" classify -m ", " construct-l0 -m ", " search-max --n-max 4 --a-max 8 -m "}) {
        auto a = run(cli + sub + cfg("sqrt23-57.cfg"));
        auto b = run(cli + sub + cfg("sqrt23-57.cfg"));
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
    }
}
