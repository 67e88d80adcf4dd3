#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "mva/link.hpp"
#include "mva/text.hpp"
#include "mva/weight.hpp"
#include "support.hpp"

using namespace mva;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string("\"") + MVATOOL_PATH + "\" " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string fx(const std::string& name)
{
    return "\"" + data_dir() + "/fixtures/" + name + "\"";
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("weight of the three-chord example")
{
    Run r = run("weight " + fx("s5.json"));
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "-t2^2");
}

TEST_CASE("mva of the two-component example")
{
    Run r = run("mva " + fx("s2.json"));
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "x*y*(1 - y + y^2)");
    Run d = run("mva " + fx("s2.json") + " --delete a3");
    CHECK(d.status == 0);
    CHECK(first_line(d.out) == "x*y*(1 - y + y^2)");
}

TEST_CASE("json output parses back to the same polynomial")
{
    ChordDiagram d = parse_chord_diagram(fixture("s5.json"));
    Run w = run("weight " + fx("s5.json") + " --format json");
    REQUIRE(w.status == 0);
    auto jw = nlohmann::json::parse(w.out);
    CHECK(poly_from_json(jw["weight"]["terms"], d.names(), d.nvars()) == weight(d).weight);

    LinkDiagram l = parse_link(fixture("s2.json"));
    Run m = run("mva " + fx("s2.json") + " --format json");
    REQUIRE(m.status == 0);
    auto jm = nlohmann::json::parse(m.out);
    CHECK(poly_from_json(jm["value"]["terms"], l.names(), l.nvars()) == mva::mva(l, 0).value);
}

TEST_CASE("expand")
{
    Run r = run("expand \"t1 - 1\" --degree 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("degree 2: 1/2*t1^2") != std::string::npos);
}

TEST_CASE("relation and theorem commands")
{
    Run rel = run("check-relation \"" + data_dir() + "/data/s7.json\"");
    CHECK(rel.status == 0);
    CHECK(rel.out.rfind("holds", 0) == 0);
    Run t = run("verify-theorem " + fx("theorem_m3.json"));
    CHECK(t.status == 0);
    CHECK(t.out.find("verdict: equal") != std::string::npos);
}

TEST_CASE("selftest")
{
    Run r = run("selftest --data-dir \"" + data_dir() + "\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bad input")
{
    CHECK(run("weight /nonexistent/file.json").status == 2);
    CHECK(run("weight " + fx("s5.json") + " --bogus").status == 2);
    CHECK(run("mva " + fx("s5.json")).status == 2);
    CHECK(run("").status == 2);
}
