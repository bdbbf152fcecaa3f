#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qlie/cli.hpp"
#include "qlie/golden.hpp"
#include "qlie/specfile.hpp"

using namespace qlie;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string &name)
{
    return std::string(QLIE_DATA_DIR) + "/" + name;
}

fs::path scratch(const std::string &name)
{
    fs::path dir = fs::temp_directory_path() / ("qlie_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string &name, const std::string &text)
{
    auto p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

struct Run {
    int code;
    std::string out, err;
    Report report;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    auto r = run_command(args, out, err);
    return {r.exit_code, out.str(), err.str(), r.report};
}

const char *kJText = R"(# comment line
[bialgebra]
dim_h = 1
dim_v = 1
[A]
0 0 0 = 1   # [H, X] = X
[alpha]
0 0 0 = 1
)";

} // namespace

TEST_CASE("parse the J file")
{
    auto f = parse_spec_text(kJText);
    CHECK(f.spec == golden::jordanian());
    CHECK_FALSE(f.r);
    CHECK(parse_spec_file(data("J.bq")).spec == golden::jordanian());
    auto fr = parse_spec_file(data("J_r.bq"));
    REQUIRE(fr.r);
    CHECK(*fr.r == golden::jordanian_r());
}

TEST_CASE("parse errors name the line")
{
    auto fails = [](const std::string &text, const std::string &needle) {
        try {
            parse_spec_text(text);
        } catch (const SpecParseError &e) {
            CAPTURE(e.what());
            return std::string(e.what()).find(needle) != std::string::npos;
        }
        return false;
    };
    const std::string head = "[bialgebra]\ndim_h = 1\ndim_v = 1\n";
    CHECK(fails(head + "[A]\n0 0 0 = 1/0\n", "line 5: zero denominator"));
    CHECK(fails(head + "[A]\n0 0 1 = 1\n", "out of range"));
    CHECK(fails(head + "[A]\n0 0 0 = 1\n0 0 0 = 2\n", "line 6"));
    CHECK(fails(head + "[A]\n0 0 = 1\n", "line 5"));
    CHECK(fails(head + "[B]\n", "line 4"));
    CHECK(fails(head + "[A]\n0 0 0 = x\n", "malformed rational"));
    CHECK(fails("[A]\n0 0 0 = 1\n", "line 1"));
    CHECK_THROWS_AS(parse_spec_file(scratch("missing.bq").string()), SpecParseError);
}

TEST_CASE("print and parse round trip")
{
    auto lib = golden::library();
    lib.push_back({"double(K)", classical_double(golden::k_example())});
    for (auto &[name, s] : lib) {
        CAPTURE(name);
        SpecFile f{s, std::nullopt};
        CHECK(parse_spec_text(print_spec(f)) == f);
        f.r = ClassicalRMatrix::zero(s.dim_h, s.dim_v);
        f.r->P[0][0] = make_rational(-3, 7);
        CHECK(parse_spec_text(print_spec(f)) == f);
    }
}

TEST_CASE("validate and quantize")
{
    auto v = run({"validate", "-i", data("J.bq")});
    CHECK(v.code == kExitPass);
    CHECK(v.report.checks.size() >= 10);

    auto q = run({"quantize", "-i", data("J.bq"), "--order", "3", "--show", "relations"});
    CHECK(q.code == kExitPass);
    CHECK(q.report.output == std::vector<std::string>{"[H, X0] = X0 + 1/2 X0^2 + 1/6 X0^3"});
    CHECK(q.out.find("[H, X0] = X0 + 1/2 X0^2 + 1/6 X0^3\n") != std::string::npos);

    auto all = run({"quantize", "-i", data("J.bq"), "--order", "2", "--show", "all"});
    CHECK(all.code == kExitPass);
    CHECK(std::find(all.report.output.begin(), all.report.output.end(), "Delta(H0) =") != all.report.output.end());
    CHECK(std::find(all.report.output.begin(), all.report.output.end(), "S(X0) =") != all.report.output.end());

    auto bad = write_file("bad.bq", "[bialgebra]\ndim_h = 1\ndim_v = 1\n[C]\n0 0 0 = 1\n");
    auto vb = run({"validate", "-i", bad.string()});
    CHECK(vb.code == kExitFail);
    CHECK(vb.report.status == "fail");
    CHECK(run({"quantize", "-i", bad.string()}).code == kExitFail);
}

TEST_CASE("full check on J")
{
    auto c = run({"check", "-i", data("J.bq"), "--order", "4", "--suite", "all"});
    CHECK(c.code == kExitPass);
    CHECK(c.report.checks.size() > 30);
    for (auto &ch : c.report.checks) {
        CAPTURE(ch.name);
        CHECK(ch.pass);
    }
    for (const char *name : {"hopf:coassociativity", "hopf:antipode-left", "double:cross-H-z",
                             "canonical:canonical-gram", "double-rmatrix:QYBE"}) {
        bool found = false;
        for (auto &ch : c.report.checks)
            found |= ch.name == name;
        CHECK_MESSAGE(found, name);
    }
    CHECK(run({"check", "-i", data("K.bq"), "--order", "3", "--suite", "hopf"}).code == kExitPass);
    CHECK(run({"check", "-i", data("J.bq"), "--suite", "nope"}).code == kExitParse);
}

TEST_CASE("rmatrix and pair")
{
    auto good = run({"rmatrix", "-i", data("J_r.bq"), "--order", "3"});
    CHECK(good.code == kExitPass);
    auto wedge = run({"rmatrix", "-i", data("J_wedge.bq"), "--order", "3"});
    CHECK(wedge.code == kExitFail);
    CHECK(run({"rmatrix", "-i", data("J.bq")}).code == kExitParse);

    auto p = run({"pair", "-i", data("J.bq"), "--left", "z0 e0", "--right", "X0 H0"});
    CHECK(p.code == kExitPass);
    CHECK(p.report.output == std::vector<std::string>{"<z0 e0, X0 H0> = 1"});
    auto p2 = run({"pair", "-i", data("J.bq"), "--left", "e0 z0", "--right", "X0 H0"});
    CHECK(p2.report.output == std::vector<std::string>{"<e0 z0, X0 H0> = 1"});
    auto pz = run({"pair", "-i", data("J.bq"), "--left", "z0 z0 z0 z0 z0", "--right", "X0 X0 X0 X0 X0"});
    CHECK(pz.report.output == std::vector<std::string>{"<z0 z0 z0 z0 z0, X0 X0 X0 X0 X0> = 120"});
    CHECK(pz.report.order == 5);
    CHECK(run({"pair", "-i", data("J.bq"), "--left", "q0", "--right", "X0"}).code == kExitParse);
    CHECK(run({"pair", "-i", data("J.bq"), "--left", "z3", "--right", "X0"}).code == kExitParse);
}

TEST_CASE("dualize twice reproduces the file")
{
    auto once = scratch("dual.bq"), twice = scratch("dual2.bq");
    for (const char *name : {"J.bq", "K.bq", "ISO.bq", "double_K.bq"}) {
        CAPTURE(name);
        REQUIRE(run({"dualize", "-i", data(name), "-o", once.string()}).code == kExitPass);
        REQUIRE(run({"dualize", "-i", once.string(), "-o", twice.string()}).code == kExitPass);
        CHECK(parse_spec_file(twice.string()) == parse_spec_file(data(name)));
    }
    auto dbl = scratch("double.bq");
    REQUIRE(run({"double", "-i", data("J.bq"), "-o", dbl.string()}).code == kExitPass);
    CHECK(parse_spec_file(dbl.string()).spec == classical_double(golden::jordanian()));
    CHECK(run({"validate", "-i", dbl.string()}).code == kExitPass);
}

TEST_CASE("argument and file errors")
{
    CHECK(run({}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({"validate"}).code == kExitParse);
    CHECK(run({"--help"}).code == kExitPass);
    CHECK(run({"check", "-i", data("J.bq"), "--order", "x"}).code == kExitParse);
    auto miss = run({"validate", "-i", scratch("none.bq").string()});
    CHECK(miss.code == kExitParse);
    auto zero = write_file("zero.bq", "[bialgebra]\ndim_h = 1\ndim_v = 1\n[A]\n0 0 0 = 1/0\n");
    auto z = run({"validate", "-i", zero.string(), "--json"});
    CHECK(z.code == kExitParse);
    CHECK(z.report.message == "line 5: zero denominator");
    CHECK(report_from_json(z.out).message == "line 5: zero denominator");
}

TEST_CASE("json and text carry the same report")
{
    auto j = run({"check", "-i", data("J_wedge.bq"), "--order", "3", "--suite", "rmatrix", "--json"});
    auto t = run({"check", "-i", data("J_wedge.bq"), "--order", "3", "--suite", "rmatrix"});
    CHECK(j.code == kExitFail);
    CHECK(t.code == kExitFail);
    Report parsed = report_from_json(j.out);
    CHECK(parsed.checks == j.report.checks);
    CHECK(parsed.output == j.report.output);
    CHECK(parsed.status == "fail");
    for (auto &c : parsed.checks) {
        CHECK(t.out.find((c.pass ? "[pass] " : "[FAIL] ") + c.name + "\n") != std::string::npos);
        for (auto &r : c.residual) {
            std::istringstream rs(r);
            std::string line;
            while (std::getline(rs, line))
                CHECK(t.out.find("    " + line + "\n") != std::string::npos);
        }
    }
    // only the timing differs between runs
    auto j2 = run({"check", "-i", data("J_wedge.bq"), "--order", "3", "--suite", "rmatrix", "--json"});
    CHECK(j.report.to_json(false) == j2.report.to_json(false));
}

TEST_CASE("installed binary exit codes")
{
    const char *bin = std::getenv("QLIE_BIN");
    if (!bin)
        return;
    auto status = [&](const std::string &args) {
        int s = std::system((std::string(bin) + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("validate -i " + data("J.bq")) == 0);
    CHECK(status("rmatrix -i " + data("J_wedge.bq") + " --order 2") == 1);
    CHECK(status("rmatrix -i " + data("J.bq")) == 2);
    CHECK(status("nonsense") == 2);
}
