#include "mva/checks.hpp"

#include <algorithm>

#include "mva/relations.hpp"
#include "mva/series.hpp"
#include "mva/text.hpp"
#include "mva/weight.hpp"

namespace mva {

void Tally::record(bool pass, const std::string& what)
{
    ++checked;
    if (!pass) {
        if (failed == 0)
            first_failure = what;
        ++failed;
    }
}

std::vector<std::vector<int>> small_colourings()
{
    return {{1}, {1, 2}, {1, 1}};
}

std::vector<ChordDiagram> small_diagrams(int max_chords)
{
    std::vector<ChordDiagram> out;
    for (int m = 1; m <= max_chords; ++m)
        for (const auto& colours : small_colourings())
            for (auto& d : enumerate_diagrams(m, colours))
                out.push_back(std::move(d));
    return out;
}

namespace {

int chord_count_of(const ChordDiagram& d)
{
    return static_cast<int>(d.chord_count());
}

// Bases for 4T quadruples: zero or one chord spread over the components in
// every way, empty components allowed, the marked point first on its circle.
std::vector<ChordDiagram> four_term_bases(int max_chords)
{
    std::vector<ChordDiagram> out;
    for (const auto& colours : small_colourings()) {
        int nv = *std::max_element(colours.begin(), colours.end());
        for (size_t mk = 0; mk < colours.size(); ++mk) {
            ChordDiagram base;
            base.variables = VarNames::defaults(nv).names;
            for (size_t c = 0; c < colours.size(); ++c) {
                ChordComponent comp;
                comp.colour = colours[c];
                if (c == mk)
                    comp.sites.push_back(Site::marked());
                base.components.push_back(comp);
            }
            out.push_back(base);
            if (max_chords < 3)
                continue;
            for (size_t ca = 0; ca < colours.size(); ++ca) {
                for (size_t cb = ca; cb < colours.size(); ++cb) {
                    ChordDiagram d = base;
                    d.components[ca].sites.push_back(Site::end("c1", 'A'));
                    d.components[cb].sites.push_back(Site::end("c1", 'B'));
                    out.push_back(d);
                }
            }
        }
    }
    return out;
}

bool valid(const ChordDiagram& d)
{
    try {
        d.validate();
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

}  // namespace

std::vector<Tally> chord_property_suite(int max_chords)
{
    Tally divisible{"det divisible by t_i", 0, 0, {}}, homogeneous{"weight homogeneous of degree m-1", 0, 0, {}},
        invariant{"side-swap and subdivision invariance", 0, 0, {}}, isolated{"isolated chord gives 0", 0, 0, {}},
        four{"4T relation", 0, 0, {}};

    for (const auto& d : small_diagrams(max_chords)) {
        std::string name = serialize_chord_diagram(d);
        int m = chord_count_of(d);
        WeightResult w;
        try {
            w = weight(d);
            divisible.record(true, name);
        } catch (const DivisionError&) {
            divisible.record(false, name);
            continue;
        }
        homogeneous.record(w.weight == homogeneous_part(w.weight, m - 1), name);
        invariant.record(weight_invariance_report(d).asserted_ok(), name);
        if (has_isolated_chord(d))
            isolated.record(w.weight.is_zero(), name);
    }

    for (const auto& base : four_term_bases(max_chords)) {
        auto gs = gaps(base);
        for (const auto& g1 : gs)
            for (const auto& g2 : gs)
                for (const auto& g3 : gs) {
                    if (g1 == g2 || g1 == g3 || g2 == g3)
                        continue;
                    auto quad = four_term(base, g1, g2, g3);
                    if (!valid(quad[0]))
                        continue;
                    MultiPoly sum = weight(quad[0]).weight - weight(quad[1]).weight + weight(quad[2]).weight -
                                    weight(quad[3]).weight;
                    four.record(sum.is_zero(), serialize_chord_diagram(quad[0]));
                }
    }
    return {divisible, homogeneous, invariant, isolated, four};
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_terms, int min_exp, int max_exp, bool half_steps)
{
    std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-5, 5), den(1, 3);
    std::uniform_int_distribution<int> ex(half_steps ? 2 * min_exp : min_exp, half_steps ? 2 * max_exp : max_exp);
    MultiPoly p = MultiPoly::zero(nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (int k = 1; k <= nvars; ++k) {
            int e = ex(rng);
            m = m * (half_steps ? Monomial::s(k, e) : Monomial::t(k, e));
        }
        Rational c(coeff(rng), den(rng));
        c.canonicalize();
        p.add_term(m, c);
    }
    return p;
}

PolyMatrix random_sparse_matrix(std::mt19937_64& rng, size_t n, int nvars, double density)
{
    std::bernoulli_distribution keep(density);
    PolyMatrix m(n, n, nvars);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (keep(rng))
                m.set(i, j, random_poly(rng, nvars, 3, -1, 2, false));
    return m;
}

Tally det_cross_check(size_t count, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> size(1, 6);
    Tally t{"Laplace det = Bareiss det", 0, 0, {}};
    for (size_t i = 0; i < count; ++i) {
        PolyMatrix m = random_sparse_matrix(rng, size(rng), 2, 0.5);
        t.record(det(m) == det_bareiss(m), "random matrix #" + std::to_string(i));
    }
    return t;
}

Tally series_homomorphism_check(size_t count, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> caps(0, 4);
    Tally t{"exp substitution is a ring map", 0, 0, {}};
    for (size_t i = 0; i < count; ++i) {
        MultiPoly a = random_poly(rng, 2, 4, -2, 2, true);
        MultiPoly b = random_poly(rng, 2, 4, -2, 2, true);
        int cap = caps(rng);
        TruncatedSeries sa = series_exp_substitute(a, cap), sb = series_exp_substitute(b, cap);
        bool ok = series_exp_substitute(a * b, cap) == sa * sb && series_exp_substitute(a + b, cap) == sa + sb;
        t.record(ok, "random pair #" + std::to_string(i));
    }
    return t;
}

Tally block_expansion_check(size_t count, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Tally t{"block determinant expansion", 0, 0, {}};
    for (size_t i = 0; i < count; ++i) {
        size_t fixed = i % 3;
        PolyMatrix a(3, 5, 2), m(2, 5 - fixed, 2);
        std::bernoulli_distribution keep(0.7);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 5; ++c)
                if (keep(rng))
                    a.set(r, c, random_poly(rng, 2, 2, 0, 2, false));
        for (size_t r = 0; r < 2; ++r)
            for (size_t c = 0; c < 5 - fixed; ++c)
                if (keep(rng))
                    m.set(r, c, random_poly(rng, 2, 2, 0, 2, false));
        t.record(det(assemble_block(a, fixed, m)) == block_expansion(a, fixed, m),
                 "random pair #" + std::to_string(i) + " (fixed " + std::to_string(fixed) + ")");
    }
    return t;
}

}  // namespace mva
