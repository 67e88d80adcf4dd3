#include "mva/chord.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mva {

namespace {
std::string site_loc(size_t c, size_t s)
{
    return "components[" + std::to_string(c) + "].sites[" + std::to_string(s) + "]";
}
}  // namespace

void ChordDiagram::validate() const
{
    if (components.empty())
        throw ParseError("no-components", "components", "diagram has no components");
    size_t marked = 0;
    std::map<std::string, std::vector<std::pair<size_t, size_t>>> ends;
    for (size_t c = 0; c < components.size(); ++c) {
        const auto& comp = components[c];
        std::string loc = "components[" + std::to_string(c) + "]";
        if (comp.colour < 1 || comp.colour > nvars())
            throw ParseError("unknown-colour", loc + ".colour",
                             "colour " + std::to_string(comp.colour) + " is not a declared variable index");
        if (comp.sites.empty())
            throw ParseError("empty-component", loc, "component has no sites");
        bool has_end = false;
        for (size_t s = 0; s < comp.sites.size(); ++s) {
            const Site& site = comp.sites[s];
            if (site.kind == Site::Kind::Marked)
                ++marked;
            if (site.kind == Site::Kind::ChordEnd) {
                has_end = true;
                if (site.side != 'A' && site.side != 'B')
                    throw ParseError("bad-site", site_loc(c, s), "chord side must be A or B");
                ends[site.chord].emplace_back(c, s);
            }
        }
        if (!has_end)
            throw ParseError("component-without-chord", loc, "component carries no chord endpoint");
    }
    if (marked != 1)
        throw ParseError("marked-count", "components",
                         "expected exactly one marked point, found " + std::to_string(marked));
    for (const auto& [id, where] : ends) {
        if (where.size() != 2) {
            auto [c, s] = where.front();
            throw ParseError("dangling-chord", site_loc(c, s),
                             "chord '" + id + "' has " + std::to_string(where.size()) + " endpoint(s)");
        }
        const Site& a = components[where[0].first].sites[where[0].second];
        const Site& b = components[where[1].first].sites[where[1].second];
        if (a.side == b.side)
            throw ParseError("dangling-chord", site_loc(where[1].first, where[1].second),
                             "chord '" + id + "' has two endpoints on side " + std::string(1, a.side));
    }
}

size_t ChordDiagram::arc_count() const
{
    size_t n = 0;
    for (const auto& c : components)
        n += c.sites.size();
    return n;
}

size_t ChordDiagram::out_arc(size_t comp, size_t site) const
{
    size_t base = 0;
    for (size_t c = 0; c < comp; ++c)
        base += components[c].sites.size();
    return base + site;
}

size_t ChordDiagram::in_arc(size_t comp, size_t site) const
{
    size_t k = components.at(comp).sites.size();
    return out_arc(comp, (site + k - 1) % k);
}

std::pair<size_t, size_t> ChordDiagram::site_of_arc(size_t arc) const
{
    for (size_t c = 0; c < components.size(); ++c) {
        if (arc < components[c].sites.size())
            return {c, arc};
        arc -= components[c].sites.size();
    }
    throw UsageError("arc index out of range");
}

ArcTable ChordDiagram::arcs() const
{
    ArcTable t;
    for (size_t c = 0; c < components.size(); ++c) {
        for (size_t s = 0; s < components[c].sites.size(); ++s) {
            if (components[c].sites[s].kind == Site::Kind::Marked)
                t.marked = t.labels.size();
            t.labels.push_back("a" + std::to_string(t.labels.size() + 1));
            t.colour.push_back(components[c].colour);
            t.component.push_back(c);
        }
    }
    return t;
}

std::vector<std::pair<std::string, ChordEnds>> ChordDiagram::chords() const
{
    std::vector<std::pair<std::string, ChordEnds>> out;
    std::map<std::string, size_t> index;
    for (size_t c = 0; c < components.size(); ++c) {
        for (size_t s = 0; s < components[c].sites.size(); ++s) {
            const Site& site = components[c].sites[s];
            if (site.kind != Site::Kind::ChordEnd)
                continue;
            auto it = index.find(site.chord);
            if (it == index.end()) {
                it = index.emplace(site.chord, out.size()).first;
                out.emplace_back(site.chord, ChordEnds{});
            }
            ChordEnds& e = out[it->second].second;
            if (site.side == 'A') {
                e.comp_a = c;
                e.site_a = s;
            } else {
                e.comp_b = c;
                e.site_b = s;
            }
        }
    }
    return out;
}

size_t ChordDiagram::chord_count() const
{
    return chords().size();
}

ChordDiagram chord_diagram_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("bad-json", "", "diagram must be a JSON object");
    ChordDiagram d;
    if (j.contains("variables")) {
        if (!j["variables"].is_array())
            throw ParseError("bad-json", "variables", "expected a list of names");
        for (const auto& v : j["variables"]) {
            if (!v.is_string())
                throw ParseError("bad-json", "variables", "variable names must be strings");
            d.variables.push_back(v.get<std::string>());
        }
    }
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("no-components", "components", "missing component list");
    int max_colour = 0;
    std::map<std::string, int> seen;
    for (size_t c = 0; c < j["components"].size(); ++c) {
        const auto& jc = j["components"][c];
        std::string loc = "components[" + std::to_string(c) + "]";
        if (!jc.is_object() || !jc.contains("colour") || !jc["colour"].is_number_integer())
            throw ParseError("bad-json", loc, "component needs an integer 'colour'");
        ChordComponent comp;
        comp.colour = jc["colour"].get<int>();
        max_colour = std::max(max_colour, comp.colour);
        if (jc.contains("sites")) {
            if (!jc["sites"].is_array())
                throw ParseError("bad-json", loc + ".sites", "expected a list");
            for (size_t s = 0; s < jc["sites"].size(); ++s) {
                const auto& js = jc["sites"][s];
                if (!js.is_object())
                    throw ParseError("bad-site", site_loc(c, s), "site must be an object");
                if (js.contains("chord")) {
                    if (!js["chord"].is_string())
                        throw ParseError("bad-site", site_loc(c, s), "chord id must be a string");
                    std::string id = js["chord"].get<std::string>();
                    char side;
                    if (js.contains("side")) {
                        std::string sd = js["side"].is_string() ? js["side"].get<std::string>() : "";
                        if (sd != "A" && sd != "B")
                            throw ParseError("bad-site", site_loc(c, s), "side must be \"A\" or \"B\"");
                        side = sd[0];
                    } else {
                        side = seen[id] == 0 ? 'A' : 'B';
                    }
                    ++seen[id];
                    comp.sites.push_back(Site::end(id, side));
                } else if (js.value("marked", false)) {
                    comp.sites.push_back(Site::marked());
                } else if (js.value("sub", false)) {
                    comp.sites.push_back(Site::sub());
                } else {
                    throw ParseError("bad-site", site_loc(c, s), "site must be a chord end, marked or sub");
                }
            }
        }
        d.components.push_back(std::move(comp));
    }
    if (!j.contains("variables"))
        d.variables = VarNames::defaults(std::max(max_colour, 1)).names;
    d.validate();
    return d;
}

ChordDiagram parse_chord_diagram(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("bad-json", "byte " + std::to_string(e.byte), e.what());
    }
    return chord_diagram_from_json(j);
}

nlohmann::json to_json(const ChordDiagram& d)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : d.components) {
        nlohmann::json sites = nlohmann::json::array();
        for (const auto& s : c.sites) {
            switch (s.kind) {
            case Site::Kind::ChordEnd:
                sites.push_back({{"chord", s.chord}, {"side", std::string(1, s.side)}});
                break;
            case Site::Kind::Marked:
                sites.push_back({{"marked", true}});
                break;
            case Site::Kind::Subdivision:
                sites.push_back({{"sub", true}});
                break;
            }
        }
        comps.push_back({{"colour", c.colour}, {"sites", sites}});
    }
    return {{"variables", d.variables}, {"components", comps}};
}

std::string serialize_chord_diagram(const ChordDiagram& d)
{
    return to_json(d).dump(1) + "\n";
}

ChordDiagram subdivide(const ChordDiagram& d, const std::string& arc)
{
    ArcTable t = d.arcs();
    auto it = std::find(t.labels.begin(), t.labels.end(), arc);
    if (it == t.labels.end())
        throw UsageError("no arc named '" + arc + "'");
    auto [c, s] = d.site_of_arc(static_cast<size_t>(it - t.labels.begin()));
    ChordDiagram r = d;
    auto& sites = r.components[c].sites;
    sites.insert(sites.begin() + static_cast<long>(s) + 1, Site::sub());
    return r;
}

ChordDiagram swap_sides(const ChordDiagram& d, const std::string& chord)
{
    ChordDiagram r = d;
    int hits = 0;
    for (auto& c : r.components)
        for (auto& s : c.sites)
            if (s.kind == Site::Kind::ChordEnd && s.chord == chord) {
                s.side = s.side == 'A' ? 'B' : 'A';
                ++hits;
            }
    if (hits != 2)
        throw UsageError("no chord named '" + chord + "'");
    return r;
}

ChordDiagram move_marked(const ChordDiagram& d, size_t pos)
{
    ChordDiagram r = d;
    for (auto& c : r.components) {
        auto it = std::find_if(c.sites.begin(), c.sites.end(),
                               [](const Site& s) { return s.kind == Site::Kind::Marked; });
        if (it == c.sites.end())
            continue;
        c.sites.erase(it);
        if (pos > c.sites.size())
            throw UsageError("marked point position out of range");
        c.sites.insert(c.sites.begin() + static_cast<long>(pos), Site::marked());
        return r;
    }
    throw UsageError("diagram has no marked point");
}

namespace {

void pairings(std::vector<int>& partner, std::vector<std::vector<int>>& out)
{
    size_t first = 0;
    while (first < partner.size() && partner[first] >= 0)
        ++first;
    if (first == partner.size()) {
        out.push_back(partner);
        return;
    }
    for (size_t j = first + 1; j < partner.size(); ++j) {
        if (partner[j] >= 0)
            continue;
        partner[first] = static_cast<int>(j);
        partner[j] = static_cast<int>(first);
        pairings(partner, out);
        partner[first] = partner[j] = -1;
    }
}

void distributions(size_t comps, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (cur.size() + 1 == comps) {
        if (total >= 1) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int k = 1; k <= total - static_cast<int>(comps - cur.size() - 1); ++k) {
        cur.push_back(k);
        distributions(comps, total - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int m, const std::vector<int>& colours, int marked)
{
    std::vector<ChordDiagram> out;
    if (m < 1 || colours.empty())
        return out;
    int nv = *std::max_element(colours.begin(), colours.end());
    std::vector<std::vector<int>> dists;
    std::vector<int> cur;
    distributions(colours.size(), 2 * m, cur, dists);
    std::vector<int> partner(static_cast<size_t>(2 * m), -1);
    std::vector<std::vector<int>> pairs;
    pairings(partner, pairs);

    for (size_t mk = 0; mk < colours.size(); ++mk) {
        if (marked >= 0 && static_cast<size_t>(marked) != mk)
            continue;
        for (const auto& dist : dists) {
            for (const auto& p : pairs) {
                ChordDiagram d;
                d.variables = VarNames::defaults(nv).names;
                std::vector<std::string> id(p.size());
                int next = 1;
                for (size_t i = 0; i < p.size(); ++i)
                    if (static_cast<size_t>(p[i]) > i)
                        id[i] = id[static_cast<size_t>(p[i])] = "c" + std::to_string(next++);
                size_t slot = 0;
                for (size_t c = 0; c < colours.size(); ++c) {
                    ChordComponent comp;
                    comp.colour = colours[c];
                    if (c == mk)
                        comp.sites.push_back(Site::marked());
                    for (int k = 0; k < dist[c]; ++k, ++slot)
                        comp.sites.push_back(Site::end(id[slot], static_cast<size_t>(p[slot]) > slot ? 'A' : 'B'));
                    d.components.push_back(std::move(comp));
                }
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

bool has_isolated_chord(const ChordDiagram& d)
{
    for (const auto& comp : d.components) {
        std::vector<std::string> ends;
        for (const auto& s : comp.sites)
            if (s.kind == Site::Kind::ChordEnd)
                ends.push_back(s.chord);
        size_t n = ends.size();
        for (size_t i = 0; i < n && n >= 2; ++i)
            if (ends[i] == ends[(i + 1) % n])
                return true;
    }
    return false;
}

std::vector<Gap> gaps(const ChordDiagram& d)
{
    std::vector<Gap> out;
    for (size_t c = 0; c < d.components.size(); ++c) {
        size_t n = d.components[c].sites.size();
        if (n == 0)
            out.push_back({c, 0});
        for (size_t j = 1; j <= n; ++j)
            out.push_back({c, j});
    }
    return out;
}

namespace {

ChordDiagram insert_sites(const ChordDiagram& base, std::vector<std::pair<Gap, std::vector<Site>>> ins)
{
    ChordDiagram d = base;
    std::sort(ins.begin(), ins.end(), [](const auto& a, const auto& b) {
        return a.first.comp != b.first.comp ? a.first.comp < b.first.comp : a.first.pos > b.first.pos;
    });
    for (const auto& [g, sites] : ins) {
        auto& list = d.components.at(g.comp).sites;
        if (g.pos > list.size())
            throw UsageError("gap out of range");
        list.insert(list.begin() + static_cast<long>(g.pos), sites.begin(), sites.end());
    }
    return d;
}

std::string fresh_id(const ChordDiagram& d, const std::string& stem)
{
    std::set<std::string> used;
    for (const auto& c : d.components)
        for (const auto& s : c.sites)
            if (s.kind == Site::Kind::ChordEnd)
                used.insert(s.chord);
    std::string id = stem;
    for (int k = 1; used.count(id); ++k)
        id = stem + std::to_string(k);
    return id;
}

}  // namespace

std::vector<ChordDiagram> four_term(const ChordDiagram& base, Gap g1, Gap g2, Gap g3)
{
    if (g1 == g2 || g1 == g3 || g2 == g3)
        throw UsageError("4T gaps must be distinct");
    std::string p = fresh_id(base, "p");
    ChordDiagram tmp = base;
    tmp.components.front().sites.push_back(Site::end(p, 'A'));
    std::string q = fresh_id(tmp, "q");
    Site pa = Site::end(p, 'A'), pb = Site::end(p, 'B');
    Site qa = Site::end(q, 'A'), qb = Site::end(q, 'B');
    return {
        insert_sites(base, {{g1, {pa, qa}}, {g2, {pb}}, {g3, {qb}}}),
        insert_sites(base, {{g1, {qa, pa}}, {g2, {pb}}, {g3, {qb}}}),
        insert_sites(base, {{g2, {pb, qa}}, {g1, {pa}}, {g3, {qb}}}),
        insert_sites(base, {{g2, {qa, pb}}, {g1, {pa}}, {g3, {qb}}}),
    };
}

}  // namespace mva
