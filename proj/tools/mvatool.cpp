#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mva/finitetype.hpp"
#include "mva/link.hpp"
#include "mva/relations.hpp"
#include "mva/series.hpp"
#include "mva/weight.hpp"
#include "selftest.hpp"

using nlohmann::json;
using namespace mva;

namespace {

// exit codes: 0 ok, 1 assertion failed, 2 bad input or usage, 3 inconsistent diagram
constexpr int kAssertion = 1;
constexpr int kInput = 2;
constexpr int kDiagram = 3;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render(const MultiPoly& p, const VarNames& names, const std::string& format)
{
    if (format == "latex")
        return to_latex(p, names);
    return to_text_factored(p, names);
}

void print_matrix_text(const PolyMatrix& m, const VarNames& names, std::ostream& out)
{
    std::vector<std::vector<std::string>> cells(m.rows() + 1);
    cells[0].push_back("");
    for (const auto& l : m.col_labels())
        cells[0].push_back(l);
    for (size_t i = 0; i < m.rows(); ++i) {
        cells[i + 1].push_back(m.row_labels().empty() ? std::to_string(i) : m.row_labels()[i]);
        for (size_t j = 0; j < m.cols(); ++j)
            cells[i + 1].push_back(m.at(i, j).is_zero() ? "." : to_text(m.at(i, j), names));
    }
    std::vector<size_t> width(m.cols() + 1, 0);
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j)
            out << (j ? "  " : "") << std::string(width[j] - row[j].size(), ' ') << row[j];
        out << "\n";
    }
}

void print_matrix_latex(const PolyMatrix& m, const VarNames& names, std::ostream& out)
{
    out << "\\begin{array}{c|" << std::string(m.cols(), 'c') << "}\n";
    for (const auto& l : m.col_labels())
        out << " & " << l;
    out << " \\\\ \\hline\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        out << m.row_labels()[i];
        for (size_t j = 0; j < m.cols(); ++j)
            out << " & " << (m.at(i, j).is_zero() ? "" : to_latex(m.at(i, j), names));
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
}

json matrix_json(const PolyMatrix& m, const VarNames& names)
{
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (size_t j = 0; j < m.cols(); ++j)
            r.push_back(to_text(m.at(i, j), names));
        rows.push_back(r);
    }
    return {{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", rows}};
}

json poly_json(const MultiPoly& p, const VarNames& names)
{
    return {{"text", to_text(p, names)}, {"terms", to_json(p, names)}};
}

int cmd_weight(const std::string& file, bool show_matrix, bool invariance, const std::string& format)
{
    ChordDiagram d = parse_chord_diagram(slurp(file));
    WeightResult w = weight(d);
    VarNames names = d.names();
    ArcTable arcs = d.arcs();
    if (format == "json") {
        json j = {{"weight", poly_json(w.weight, names)},
                  {"det", poly_json(w.det, names)},
                  {"marked_arc", arcs.labels[w.marked_arc]},
                  {"marked_colour", w.marked_colour},
                  {"chords", w.chords}};
        if (show_matrix)
            j["matrix"] = matrix_json(w.matrix, names);
        if (invariance) {
            InvarianceReport rep = weight_invariance_report(d);
            json ji;
            auto list = [&](const std::vector<InvarianceEntry>& es) {
                json a = json::array();
                for (const auto& e : es)
                    a.push_back({{"variant", e.variant}, {"value", to_text(e.value, names)}, {"equal", e.equal}});
                return a;
            };
            ji["side_swaps"] = list(rep.side_swaps);
            ji["marked_moves"] = list(rep.marked_moves);
            ji["subdivisions"] = list(rep.subdivisions);
            ji["asserted_ok"] = rep.asserted_ok();
            j["invariance"] = ji;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (show_matrix) {
        if (format == "latex")
            print_matrix_latex(w.matrix, names, std::cout);
        else
            print_matrix_text(w.matrix, names, std::cout);
        std::cout << "marked arc " << arcs.labels[w.marked_arc] << ", det = " << render(w.det, names, format)
                  << "\n";
    }
    std::cout << render(w.weight, names, format) << "\n";
    if (invariance) {
        InvarianceReport rep = weight_invariance_report(d);
        auto list = [&](const char* head, const std::vector<InvarianceEntry>& es) {
            for (const auto& e : es)
                std::cout << head << (e.equal ? "  same   " : "  differs ") << e.variant << ": "
                          << to_text(e.value, names) << "\n";
        };
        list("side swap  ", rep.side_swaps);
        list("marked move", rep.marked_moves);
        list("subdivide  ", rep.subdivisions);
        return rep.asserted_ok() ? 0 : kAssertion;
    }
    return 0;
}

int cmd_mva(const std::string& file, const std::string& del, const std::string& column, bool details,
            const std::string& format)
{
    LinkDiagram d = parse_link(slurp(file));
    if (d.singular())
        throw UsageError(file + ": diagram has double points; use verify-theorem");
    size_t i = del.empty() ? 0 : d.arc_index(del);
    std::optional<size_t> j;
    if (!column.empty())
        j = d.arc_index(column);
    MvaResult r = mva::mva(d, i, j);
    VarNames names = d.names();
    std::vector<std::string> labels = d.arc_labels();
    if (format == "json") {
        json jr = {{"value", poly_json(r.value, names)},
                   {"det", poly_json(r.det, names)},
                   {"word", monomial_text(r.word, names)},
                   {"deleted_row", labels.empty() ? "" : labels[r.i]},
                   {"deleted_column", labels.empty() ? "" : labels[r.j]},
                   {"mu", r.mu},
                   {"rot", r.rot},
                   {"knot", r.knot},
                   {"split", r.split}};
        if (r.knot_times)
            jr["knot_times_t_minus_1"] = poly_json(*r.knot_times, names);
        if (r.knot)
            jr["knot_divided_by_t_minus_1"] = r.knot_divided ? poly_json(*r.knot_divided, names) : json(nullptr);
        if (details)
            jr["matrix"] = matrix_json(wirtinger_matrix(d), names);
        std::cout << jr.dump(2) << "\n";
        return 0;
    }
    if (details && !r.split) {
        PolyMatrix m = wirtinger_matrix(d);
        if (format == "latex")
            print_matrix_latex(m, names, std::cout);
        else
            print_matrix_text(m, names, std::cout);
        std::cout << "deleted row " << m.row_labels()[r.i] << ", column " << labels[r.j] << "\n";
        std::cout << "det = " << render(r.det, names, format) << "\n";
        std::cout << "w = " << monomial_text(r.word, names) << "\n";
        for (size_t k = 0; k < r.mu.size(); ++k)
            std::cout << "component " << k + 1 << ": mu = " << r.mu[k] << ", rot = " << r.rot[k] << "\n";
    }
    std::cout << render(r.value, names, format) << "\n";
    if (r.knot) {
        std::cout << "note: knot, value not divided by (t-1); times (t-1): "
                  << render(*r.knot_times, names, format) << "; divided by (t-1): "
                  << (r.knot_divided ? render(*r.knot_divided, names, format) : std::string("not a polynomial"))
                  << "\n";
    }
    if (r.split)
        std::cout << "note: a component never passes under, the diagram is split\n";
    return 0;
}

int cmd_expand(const std::string& expr, int degree, const std::string& vars, const std::string& format)
{
    VarNames names;
    std::stringstream ss(vars);
    for (std::string v; std::getline(ss, v, ',');)
        if (!v.empty())
            names.names.push_back(v);
    int nv = names.count();
    MultiPoly p = parse_poly(expr, names, nv);
    if (nv == 0) {
        nv = p.max_var();
        names = VarNames::defaults(nv);
        p = p.with_nvars(nv);
    }
    TruncatedSeries s = series_exp_substitute(p, degree);
    if (format == "json") {
        json parts = json::array();
        for (int k = 0; k <= degree; ++k)
            parts.push_back({{"degree", k}, {"part", poly_json(s.part(k), names)}});
        std::cout << json{{"input", to_text(p, names)}, {"degree", degree}, {"parts", parts}}.dump(2) << "\n";
        return 0;
    }
    for (int k = 0; k <= degree; ++k)
        std::cout << "degree " << k << ": " << render(s.part(k), names, format) << "\n";
    return 0;
}

int cmd_verify(const std::string& file, std::optional<int> degree, const std::string& report)
{
    LinkDiagram d = parse_link(slurp(file));
    TheoremCheck c = verify_theorem(d, degree);
    VarNames ln = d.names(), cn = VarNames::defaults(d.nvars());
    bool ok = c.verdict == TheoremCheck::Verdict::Equal && c.lower_vanish;
    if (report == "json") {
        json parts = json::array();
        for (size_t k = 0; k < c.parts.size(); ++k)
            parts.push_back({{"degree", k}, {"part", poly_json(c.parts[k], cn)}});
        json terms = json::array();
        for (const auto& v : c.term_values)
            terms.push_back(to_text(v, ln));
        json j = {{"double_points", c.m},
                  {"cap", c.cap},
                  {"knot", c.knot},
                  {"chord_diagram", to_json(c.diagram)},
                  {"resolution_values", terms},
                  {"alternating_sum", poly_json(c.sum, ln)},
                  {"parity_ok", c.parity_ok},
                  {"parts", parts},
                  {"first_nonzero_degree", c.first_nonzero_degree ? json(*c.first_nonzero_degree) : json(nullptr)},
                  {"lower_vanish", c.lower_vanish},
                  {"coefficient", poly_json(c.coefficient, cn)},
                  {"weight", poly_json(c.weight, cn)},
                  {"verdict", verdict_name(c.verdict)}};
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : kAssertion;
    }
    std::cout << "double points: " << c.m << ", series cap: " << c.cap << (c.knot ? ", knot" : "") << "\n";
    std::cout << "alternating sum: " << to_text_factored(c.sum, ln) << "\n";
    for (size_t k = 0; k < c.parts.size(); ++k)
        std::cout << "degree " << k << ": " << to_text(c.parts[k], cn) << "\n";
    std::cout << "weight of underlying chord diagram: " << to_text(c.weight, cn) << "\n";
    std::cout << "lower degrees vanish: " << (c.lower_vanish ? "yes" : "no") << "\n";
    std::cout << "verdict: " << verdict_name(c.verdict) << "\n";
    return ok ? 0 : kAssertion;
}

int cmd_check_relation(const std::string& file, bool witness, std::optional<size_t> fixed)
{
    RelationSpec spec = parse_relation(slurp(file));
    if (fixed) {
        if (*fixed > spec.k)
            throw UsageError("--fixed cannot exceed the minor order");
        spec.fixed = *fixed;
    }
    RelationVerdict v = check_minor_relation(spec);
    std::cout << (v.holds ? "holds" : "fails") << ": " << spec.blocks.size() << " blocks, "
              << v.minor_vector.size() << " minors of order " << spec.k << "\n";
    if (witness && v.first_nonzero) {
        std::cout << "first nonzero minor, columns";
        for (size_t c : v.first_nonzero->subset)
            std::cout << " " << c + 1;
        std::cout << ": " << to_text(v.first_nonzero->value, spec.names()) << "\n";
    }
    return v.holds ? 0 : kAssertion;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multivariable Alexander polynomial and its chord-diagram weight system"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    };

    std::string file, del, column, expr, vars, report = "text", data_dir = MVA_DATA_DIR;
    bool show_matrix = false, invariance = false, details = false, witness = false;
    int degree = 2;
    std::optional<int> theorem_degree;
    std::optional<size_t> fixed;

    auto* w = app.add_subcommand("weight", "weight of a coloured chord diagram");
    w->add_option("file", file, "chord diagram JSON")->required();
    w->add_flag("--show-matrix", show_matrix, "print M(D) before deletion");
    w->add_flag("--invariance", invariance, "recompute under side swaps, marked moves and subdivisions");
    add_format(w);

    auto* m = app.add_subcommand("mva", "multivariable Alexander polynomial of a link diagram");
    m->add_option("file", file, "link diagram JSON")->required();
    m->add_option("--delete", del, "arc (or crossing id) whose row and column are deleted");
    m->add_option("--column", column, "delete a different column than row");
    m->add_flag("--details", details, "print matrix, det, path word, mu and rot");
    add_format(m);

    auto* e = app.add_subcommand("expand", "expand a Laurent polynomial under x_k = exp(t_k)");
    e->add_option("expr", expr, "polynomial")->required();
    e->add_option("--degree", degree, "truncation degree")->check(CLI::NonNegativeNumber);
    e->add_option("--vars", vars, "comma-separated variable names (default t1..tn)");
    add_format(e);

    auto* v = app.add_subcommand("verify-theorem", "compare a singular link's series coefficient with its weight");
    v->add_option("file", file, "singular link diagram JSON")->required();
    v->add_option("--degree", theorem_degree, "series truncation degree (at least the number of double points)");
    v->add_option("--report", report, "report format")->check(CLI::IsMember({"text", "json"}));

    auto* r = app.add_subcommand("check-relation", "check a relation through the minors of its blocks");
    r->add_option("file", file, "relation JSON")->required();
    r->add_flag("--witness", witness, "print the first nonzero combined minor");
    r->add_option("--fixed", fixed, "override the number of columns every minor contains");

    auto* s = app.add_subcommand("selftest", "reproduce the bundled examples and run the property suites");
    s->add_option("--data-dir", data_dir, "directory holding fixtures/ and data/");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInput;
    }

    try {
        if (*w)
            return cmd_weight(file, show_matrix, invariance, format);
        if (*m)
            return cmd_mva(file, del, column, details, format);
        if (*e)
            return cmd_expand(expr, degree, vars, format);
        if (*v)
            return cmd_verify(file, theorem_degree, report);
        if (*r)
            return cmd_check_relation(file, witness, fixed);
        if (*s)
            return run_selftest(data_dir, std::cout) ? kAssertion : 0;
    } catch (const ParseError& err) {
        std::cerr << "error: " << (file.empty() ? "" : file + ": ") << "[" << err.code << "] " << err.what() << "\n";
        return kInput;
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kInput;
    } catch (const DiagramError& err) {
        std::cerr << "error: " << (file.empty() ? "" : file + ": ") << err.what() << "\n";
        return kDiagram;
    } catch (const DivisionError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kDiagram;
    }
    return 0;
}
