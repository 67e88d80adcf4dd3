#include "mva/relations.hpp"

#include <fstream>
#include <sstream>

#include "mva/weight.hpp"

namespace mva {

std::vector<std::vector<size_t>> RelationSpec::subsets() const
{
    if (blocks.empty())
        return {};
    return minor_subsets(blocks.front().matrix.cols(), k, fixed);
}

namespace {

MultiPoly entry_poly(const nlohmann::json& e, const VarNames& names, int nv, const std::string& loc)
{
    std::string text;
    if (e.is_string())
        text = e.get<std::string>();
    else if (e.is_number_integer())
        text = std::to_string(e.get<long>());
    else
        throw ParseError("bad-entry", loc, "entry must be a polynomial string or an integer");
    try {
        return parse_poly(text, names, nv);
    } catch (const std::exception& err) {
        throw ParseError("bad-entry", loc, std::string("cannot parse '") + text + "': " + err.what());
    }
}

}  // namespace

RelationSpec relation_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("bad-json", "", "relation file must be a JSON object");
    RelationSpec spec;
    if (!j.contains("variables") || !j["variables"].is_array())
        throw ParseError("bad-json", "variables", "expected a list of variable names");
    for (const auto& v : j["variables"])
        spec.variables.push_back(v.get<std::string>());
    if (!j.contains("k") || !j["k"].is_number_unsigned())
        throw ParseError("bad-json", "k", "minor order 'k' must be a non-negative integer");
    spec.k = j["k"].get<size_t>();
    if (j.contains("fixed")) {
        if (!j["fixed"].is_number_unsigned())
            throw ParseError("bad-json", "fixed", "'fixed' must be a non-negative integer");
        spec.fixed = j["fixed"].get<size_t>();
    }
    if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty())
        throw UsageError("relation has no blocks");

    VarNames names = spec.names();
    int nv = spec.nvars();
    size_t rows = 0, cols = 0;
    for (size_t b = 0; b < j["blocks"].size(); ++b) {
        const auto& jb = j["blocks"][b];
        std::string loc = "blocks[" + std::to_string(b) + "]";
        if (!jb.is_object() || !jb.contains("coeff") || !jb.contains("matrix") || !jb["matrix"].is_array())
            throw ParseError("bad-json", loc, "block needs 'coeff' and 'matrix'");
        RelationBlock block;
        block.coeff = entry_poly(jb["coeff"], names, nv, loc + ".coeff");
        if (block.coeff.is_zero())
            throw ParseError("zero-coefficient", loc + ".coeff", "block coefficient is zero");
        const auto& jm = jb["matrix"];
        std::vector<std::vector<MultiPoly>> dense;
        for (size_t r = 0; r < jm.size(); ++r) {
            std::string rloc = loc + ".matrix[" + std::to_string(r) + "]";
            if (!jm[r].is_array())
                throw ParseError("bad-json", rloc, "matrix row must be a list");
            if (r > 0 && jm[r].size() != dense.front().size())
                throw ParseError("ragged-matrix", rloc,
                                 "row has " + std::to_string(jm[r].size()) + " entries, expected " +
                                     std::to_string(dense.front().size()));
            std::vector<MultiPoly> row;
            for (size_t c = 0; c < jm[r].size(); ++c)
                row.push_back(entry_poly(jm[r][c], names, nv, rloc + "[" + std::to_string(c) + "]"));
            dense.push_back(std::move(row));
        }
        if (dense.empty() || dense.front().empty())
            throw ParseError("empty-matrix", loc + ".matrix", "matrix is empty");
        if (b == 0) {
            rows = dense.size();
            cols = dense.front().size();
        } else if (dense.size() != rows || dense.front().size() != cols) {
            throw ParseError("dimension-mismatch", loc + ".matrix",
                             "block shape differs from the first block's " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
        }
        block.matrix = PolyMatrix::from_dense(dense, nv);
        spec.blocks.push_back(std::move(block));
    }
    if (spec.k == 0 || spec.k > rows || spec.k > cols)
        throw ParseError("bad-order", "k", "minor order must be between 1 and the block dimensions");
    if (spec.fixed > spec.k)
        throw ParseError("bad-order", "fixed", "'fixed' cannot exceed the minor order");
    return spec;
}

RelationSpec parse_relation(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("bad-json", "byte " + std::to_string(e.byte), e.what());
    }
    return relation_from_json(j);
}

RelationSpec load_relation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_relation(ss.str());
    } catch (const ParseError& e) {
        std::string msg = e.what();
        if (!e.location.empty())
            msg = msg.substr(e.location.size() + 2);
        throw ParseError(e.code, path + ": " + e.location, msg);
    }
}

RelationVerdict check_minor_relation(const RelationSpec& spec)
{
    if (spec.blocks.empty())
        throw UsageError("relation has no blocks");
    RelationVerdict v;
    v.subsets = spec.subsets();
    int nv = spec.nvars();
    v.minor_vector.assign(v.subsets.size(), MultiPoly::zero(nv));
    for (const auto& block : spec.blocks) {
        if (block.matrix.rows() != spec.blocks.front().matrix.rows() ||
            block.matrix.cols() != spec.blocks.front().matrix.cols())
            throw UsageError("relation blocks have different shapes");
        std::vector<MultiPoly> minors = all_minors(block.matrix, spec.k, spec.fixed);
        for (size_t s = 0; s < minors.size(); ++s)
            v.minor_vector[s] += block.coeff * minors[s];
    }
    v.holds = true;
    for (size_t s = 0; s < v.minor_vector.size(); ++s) {
        if (!v.minor_vector[s].is_zero()) {
            v.holds = false;
            v.first_nonzero = MinorWitness{v.subsets[s], v.minor_vector[s]};
            break;
        }
    }
    return v;
}

FourRowSuite builtin_four_row_suite(const std::string& data_dir)
{
    FourRowSuite s;
    s.spec = load_relation(data_dir + "/data/s7.json");
    if (s.spec.blocks.size() != 2)
        throw UsageError("the bundled four-row relation must have two blocks");
    s.first = all_minors(s.spec.blocks[0].matrix, s.spec.k, s.spec.fixed);
    s.second = all_minors(s.spec.blocks[1].matrix, s.spec.k, s.spec.fixed);
    s.verdict = check_minor_relation(s.spec);
    return s;
}

RelationSpec builtin_five_row_spec(const std::string& data_dir)
{
    return load_relation(data_dir + "/data/s8.json");
}

RelationVerdict check_diagram_relation(const std::vector<std::pair<MultiPoly, ChordDiagram>>& terms)
{
    if (terms.empty())
        throw UsageError("relation has no terms");
    int nv = terms.front().second.nvars();
    MultiPoly total = MultiPoly::zero(nv);
    for (const auto& [c, d] : terms) {
        if (d.nvars() != nv)
            throw UsageError("diagrams in a relation must share their variables");
        total += c * weight(d).weight;
    }
    RelationVerdict v;
    v.minor_vector = {total};
    v.subsets = {{}};
    v.holds = total.is_zero();
    if (!v.holds)
        v.first_nonzero = MinorWitness{{}, total};
    return v;
}

PolyMatrix assemble_block(const PolyMatrix& a, size_t fixed, const PolyMatrix& m)
{
    size_t n = a.rows() + m.rows();
    if (a.cols() > n || m.cols() + fixed != n)
        throw UsageError("block shapes do not assemble into a square matrix");
    int nv = merged_context(a.nvars(), m.nvars());
    PolyMatrix b(n, n, nv);
    for (size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i))
            b.set(i, j, v);
    for (size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            b.set(a.rows() + i, fixed + j, v);
    return b;
}

int block_expansion_sign(const std::vector<size_t>& subset, size_t rows)
{
    size_t total = rows * (rows + 1) / 2;
    for (size_t c : subset)
        total += c + 1;
    return total % 2 ? -1 : 1;
}

MultiPoly block_expansion(const PolyMatrix& a, size_t fixed, const PolyMatrix& m)
{
    size_t n = a.rows() + m.rows();
    if (a.cols() > n || m.cols() + fixed != n)
        throw UsageError("block shapes do not assemble into a square matrix");
    int nv = merged_context(a.nvars(), m.nvars());
    std::vector<size_t> all_rows_a(a.rows()), all_rows_m(m.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        all_rows_a[i] = i;
    for (size_t i = 0; i < m.rows(); ++i)
        all_rows_m[i] = i;
    MultiPoly total = MultiPoly::zero(nv);
    for (const auto& s : minor_subsets(a.cols(), a.rows(), fixed)) {
        std::vector<size_t> rest;
        size_t si = 0;
        for (size_t c = fixed; c < n; ++c) {
            while (si < s.size() && s[si] < c)
                ++si;
            if (si < s.size() && s[si] == c)
                continue;
            rest.push_back(c - fixed);
        }
        MultiPoly da = det(a.select(all_rows_a, s));
        if (da.is_zero())
            continue;
        MultiPoly term = da * det(m.select(all_rows_m, rest));
        if (block_expansion_sign(s, a.rows()) < 0)
            total -= term;
        else
            total += term;
    }
    return total;
}

}  // namespace mva
