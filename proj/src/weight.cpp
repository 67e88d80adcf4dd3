#include "mva/weight.hpp"

#include <algorithm>

namespace mva {

PolyMatrix build_matrix(const ChordDiagram& d)
{
    d.validate();
    int n = d.nvars();
    ArcTable arcs = d.arcs();
    PolyMatrix m(arcs.size(), arcs.size(), n);
    m.set_row_labels(arcs.labels);
    m.set_col_labels(arcs.labels);

    const MultiPoly half(Rational(1, 2), n);
    for (const auto& [id, e] : d.chords()) {
        size_t in_a = d.in_arc(e.comp_a, e.site_a), out_a = d.out_arc(e.comp_a, e.site_a);
        size_t in_b = d.in_arc(e.comp_b, e.site_b), out_b = d.out_arc(e.comp_b, e.site_b);
        MultiPoly t_a = MultiPoly::t(d.components[e.comp_a].colour, n);
        MultiPoly t_b = MultiPoly::t(d.components[e.comp_b].colour, n);

        m.add(out_a, out_a, half);
        m.add(out_a, out_b, half);
        m.add(out_a, in_a, -half);
        m.add(out_a, in_b, -half);

        m.add(out_b, out_a, t_b);
        m.add(out_b, in_a, t_b);
        m.add(out_b, out_b, -t_a);
        m.add(out_b, in_b, -t_a);
    }
    for (size_t c = 0; c < d.components.size(); ++c) {
        for (size_t s = 0; s < d.components[c].sites.size(); ++s) {
            if (d.components[c].sites[s].kind != Site::Kind::Subdivision)
                continue;
            size_t out = d.out_arc(c, s), in = d.in_arc(c, s);
            m.add(out, out, MultiPoly(1, n));
            m.add(out, in, MultiPoly(-1, n));
        }
    }
    return m;
}

WeightResult weight(const ChordDiagram& d)
{
    WeightResult r;
    r.matrix = build_matrix(d);
    ArcTable arcs = d.arcs();
    r.marked_arc = arcs.marked;
    r.marked_colour = arcs.colour[arcs.marked];
    r.chords = d.chord_count();
    r.det = det(r.matrix.without(r.marked_arc, r.marked_arc));
    r.weight = div_exact(r.det, MultiPoly::t(r.marked_colour, d.nvars()));
    return r;
}

bool InvarianceReport::asserted_ok() const
{
    for (const auto& e : side_swaps)
        if (!e.equal)
            return false;
    for (const auto& e : subdivisions)
        if (!e.equal)
            return false;
    return true;
}

InvarianceReport weight_invariance_report(const ChordDiagram& d)
{
    InvarianceReport rep;
    rep.base = weight(d).weight;
    auto entry = [&](std::string name, const ChordDiagram& v) {
        MultiPoly w = weight(v).weight;
        return InvarianceEntry{std::move(name), w, w == rep.base};
    };
    for (const auto& [id, e] : d.chords())
        rep.side_swaps.push_back(entry("swap " + id, swap_sides(d, id)));
    for (const auto& c : d.components) {
        bool has_mark = false;
        for (const auto& s : c.sites)
            has_mark |= s.kind == Site::Kind::Marked;
        if (!has_mark)
            continue;
        for (size_t pos = 0; pos < c.sites.size(); ++pos) {
            ChordDiagram moved = move_marked(d, pos);
            if (moved == d)
                continue;
            rep.marked_moves.push_back(entry("marked before site " + std::to_string(pos), moved));
        }
    }
    for (size_t c = 0; c < d.components.size(); ++c) {
        ChordDiagram moved = d;
        bool here = false;
        for (auto& comp : moved.components) {
            auto it = std::find(comp.sites.begin(), comp.sites.end(), Site::marked());
            if (it != comp.sites.end()) {
                here = &comp == &moved.components[c];
                comp.sites.erase(it);
            }
        }
        if (here)
            continue;
        auto& sites = moved.components[c].sites;
        sites.insert(sites.begin(), Site::marked());
        rep.marked_moves.push_back(entry("marked on component " + std::to_string(c + 1), moved));
    }
    for (const auto& label : d.arcs().labels)
        rep.subdivisions.push_back(entry("subdivide " + label, subdivide(d, label)));
    return rep;
}

}  // namespace mva
