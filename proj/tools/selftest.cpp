#include "selftest.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "mva/checks.hpp"
#include "mva/finitetype.hpp"
#include "mva/link.hpp"
#include "mva/relations.hpp"
#include "mva/weight.hpp"

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw mva::UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Row {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> from_tallies(const std::vector<mva::Tally>& ts)
{
    bool ok = true;
    std::string detail;
    for (const auto& t : ts) {
        ok &= t.ok();
        if (!detail.empty())
            detail += "; ";
        detail += t.name + " " + std::to_string(t.checked - t.failed) + "/" + std::to_string(t.checked);
    }
    return {ok, detail};
}

}  // namespace

int run_selftest(const std::string& dir, std::ostream& out)
{
    using namespace mva;
    std::vector<Row> rows;

    rows.push_back({"two-component link, five crossings", [&] {
        LinkDiagram d = parse_link(slurp(dir + "/fixtures/s2.json"));
        MultiPoly expect = parse_poly("x*y*(1 - y + y^2)", d.names(), d.nvars());
        bool ok = true;
        for (size_t i = 0; i < d.size(); ++i)
            ok &= mva::mva(d, i).value == expect;
        return std::pair{ok, "Delta = " + to_text_factored(mva::mva(d, d.size() - 1).value, d.names()) +
                                 " for every deleted arc"};
    }});
    rows.push_back({"three-chord weight", [&] {
        ChordDiagram d = parse_chord_diagram(slurp(dir + "/fixtures/s5.json"));
        WeightResult w = weight(d);
        bool ok = w.weight == parse_poly("-t2^2", d.names(), d.nvars()) &&
                  w.det == parse_poly("-t1*t2^2", d.names(), d.nvars());
        return std::pair{ok, "weight = " + to_text(w.weight, d.names()) + ", det = " + to_text(w.det, d.names())};
    }});
    rows.push_back({"six 4x4 minors", [&] {
        FourRowSuite s = builtin_four_row_suite(dir);
        MultiPoly q = parse_poly("((t1+t2)/2)^2", s.spec.names(), s.spec.nvars());
        std::vector<int> pattern{1, 0, -1, 1, 0, 1};
        bool ok = s.first.size() == 6 && s.second.size() == 6 && s.verdict.holds;
        for (size_t k = 0; ok && k < 6; ++k)
            ok = s.first[k] == q.scaled(pattern[k]) && s.second[k] == MultiPoly(pattern[k], s.spec.nvars());
        return std::pair{ok, std::string(s.verdict.holds ? "relation holds" : "relation fails")};
    }});
    rows.push_back({"five-row relation minors", [&] {
        RelationSpec spec = builtin_five_row_spec(dir);
        RelationVerdict v = check_minor_relation(spec);
        return std::pair{v.holds, std::to_string(v.minor_vector.size()) + " minors through column 1, " +
                                      (v.holds ? "all zero" : "nonzero entry found")};
    }});
    for (int m = 1; m <= 3; ++m) {
        rows.push_back({"singular link, " + std::to_string(m) + " double point" + (m > 1 ? "s" : ""), [&, m] {
            LinkDiagram d = parse_link(slurp(dir + "/fixtures/theorem_m" + std::to_string(m) + ".json"));
            TheoremCheck c = verify_theorem(d);
            VarNames names = VarNames::defaults(d.nvars());
            bool ok = c.verdict == TheoremCheck::Verdict::Equal && c.lower_vanish;
            return std::pair{ok, "degree " + std::to_string(m - 1) + " part " + to_text(c.coefficient, names) +
                                     ", weight " + to_text(c.weight, names) + ", " + verdict_name(c.verdict)};
        }});
    }
    rows.push_back({"chord diagram properties (m <= 3)", [] { return from_tallies(chord_property_suite(3)); }});
    rows.push_back({"algebra cross-checks", [] {
        return from_tallies({det_cross_check(100, 11), series_homomorphism_check(100, 12), block_expansion_check(100, 13)});
    }});

    int failed = 0;
    for (const auto& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        std::pair<bool, std::string> r;
        try {
            r = row.run();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !r.first;
        out << (r.first ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << row.name << std::right
            << std::fixed << std::setprecision(3) << std::setw(8) << secs << "s  " << r.second << "\n";
    }
    out << (failed ? std::to_string(failed) + " check(s) failed" : "all checks passed") << "\n";
    return failed;
}
