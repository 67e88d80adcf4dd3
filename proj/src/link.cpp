#include "mva/link.hpp"

#include <deque>
#include <set>

namespace mva {

namespace {
std::string end_loc(size_t c, size_t p)
{
    return "crossings[" + std::to_string(c) + "].ends[" + std::to_string(p) + "]";
}
}  // namespace

bool LinkDiagram::incoming(int sign, int pos)
{
    if (sign > 0)
        return pos == 0 || pos == 1;
    return pos == 0 || pos == 3;
}

int LinkDiagram::continuation(int sign, int pos)
{
    if (pos == 0)
        return 2;
    if (sign > 0)
        return 3;
    return 1;
}

LinkDiagram::LinkDiagram(LinkData d) : d_(std::move(d))
{
    const int nv = nvars();
    if (d_.crossings.empty())
        throw ParseError("no-crossings", "crossings", "diagram needs at least one crossing");
    if (d_.components.empty())
        throw ParseError("no-components", "components", "diagram needs at least one component");

    std::set<std::string> ids;
    for (size_t c = 0; c < d_.crossings.size(); ++c) {
        const auto& x = d_.crossings[c];
        std::string loc = "crossings[" + std::to_string(c) + "]";
        if (x.sign < -1 || x.sign > 1)
            throw ParseError("bad-sign", loc + ".sign", "sign must be -1, 0 or 1");
        if (!ids.insert(x.id).second)
            throw ParseError("duplicate-id", loc + ".id", "duplicate crossing id '" + x.id + "'");
    }

    std::map<std::string, std::vector<std::pair<size_t, int>>> uses;
    for (size_t c = 0; c < d_.crossings.size(); ++c)
        for (int p = 0; p < 4; ++p)
            uses[d_.crossings[c].ends[static_cast<size_t>(p)]].emplace_back(c, p);

    at_.resize(d_.crossings.size());
    for (const auto& [name, occ] : uses) {
        if (occ.size() != 2)
            throw ParseError("arc-count", end_loc(occ[0].first, static_cast<size_t>(occ[0].second)),
                             "arc '" + name + "' used " + std::to_string(occ.size()) + " times (expected 2)");
        size_t s = seg_names_.size();
        seg_names_.push_back(name);
        seg_index_[name] = s;
        std::pair<size_t, int> st{}, en{};
        int n_in = 0;
        for (const auto& [c, p] : occ) {
            at_[c][static_cast<size_t>(p)] = s;
            if (incoming(d_.crossings[c].sign, p)) {
                en = {c, p};
                ++n_in;
            } else {
                st = {c, p};
            }
        }
        if (n_in != 1)
            throw ParseError("arc-orientation", end_loc(occ[1].first, static_cast<size_t>(occ[1].second)),
                             "arc '" + name + "' must be outgoing at one crossing and incoming at the other");
        start_.push_back(st);
        end_.push_back(en);
    }

    seg_comp_.assign(seg_names_.size(), SIZE_MAX);
    for (size_t k = 0; k < d_.components.size(); ++k) {
        const auto& comp = d_.components[k];
        std::string loc = "components[" + std::to_string(k) + "]";
        if (comp.colour < 1 || comp.colour > nv)
            throw ParseError("unknown-colour", loc + ".colour",
                             "colour " + std::to_string(comp.colour) + " is not a declared variable index");
        if (!comp.rot)
            throw ParseError("missing-rot", loc + ".rot", "rotation number is required");
        auto it = seg_index_.find(comp.arc);
        if (it == seg_index_.end())
            throw ParseError("unknown-arc", loc + ".arc", "no arc named '" + comp.arc + "'");
        size_t s = it->second;
        do {
            if (seg_comp_[s] != SIZE_MAX)
                throw ParseError("component-overlap", loc,
                                 "arc '" + seg_names_[s] + "' lies on two listed components");
            seg_comp_[s] = k;
            auto [c, p] = end_[s];
            s = at_[c][static_cast<size_t>(continuation(d_.crossings[c].sign, p))];
        } while (s != it->second);
    }
    for (size_t s = 0; s < seg_names_.size(); ++s)
        if (seg_comp_[s] == SIZE_MAX)
            throw ParseError("unlisted-component", "components",
                             "arc '" + seg_names_[s] + "' is not on any listed component");

    if (d_.outer && !seg_index_.count(d_.outer->arc))
        throw ParseError("unknown-arc", "outer.arc", "no arc named '" + d_.outer->arc + "'");

    if (singular()) {
        if (!d_.outer)
            throw ParseError("missing-outer", "outer", "singular diagrams need an outer-face hint");
        return;
    }

    seg_arc_.assign(seg_names_.size(), -1);
    for (size_t i = 0; i < d_.crossings.size(); ++i) {
        size_t s = at_[i][2];
        arc_labels_.push_back(seg_names_[s]);
        for (;;) {
            seg_arc_[s] = static_cast<long>(i);
            auto [c, p] = end_[s];
            if (p == 0)
                break;
            s = at_[c][static_cast<size_t>(continuation(d_.crossings[c].sign, p))];
        }
    }
    for (long a : seg_arc_)
        split_ |= a < 0;

    for (const auto& [key, w] : d_.words) {
        bool known = ids.count(key) > 0;
        for (const auto& l : arc_labels_)
            known |= l == key;
        if (!known)
            throw ParseError("unknown-arc", "words." + key, "word given for unknown arc '" + key + "'");
    }
    if (!d_.outer) {
        for (size_t i = 0; i < size(); ++i)
            if (!d_.words.count(arc_labels_[i]) && !d_.words.count(d_.crossings[i].id))
                throw ParseError("missing-outer", "outer",
                                 "outer-face hint required unless every path word is given explicitly");
    }
}

size_t LinkDiagram::double_points() const
{
    size_t n = 0;
    for (const auto& c : d_.crossings)
        n += c.sign == 0;
    return n;
}

size_t LinkDiagram::segment_index(const std::string& name) const
{
    auto it = seg_index_.find(name);
    if (it == seg_index_.end())
        throw UsageError("no arc named '" + name + "'");
    return it->second;
}

size_t LinkDiagram::arc_of_segment(size_t s) const
{
    if (seg_arc_.empty() || seg_arc_[s] < 0)
        throw UsageError("segment '" + seg_names_[s] + "' belongs to no Wirtinger arc");
    return static_cast<size_t>(seg_arc_[s]);
}

size_t LinkDiagram::arc_index(const std::string& key) const
{
    for (size_t i = 0; i < arc_labels_.size(); ++i)
        if (arc_labels_[i] == key)
            return i;
    for (size_t i = 0; i < d_.crossings.size(); ++i)
        if (d_.crossings[i].id == key)
            return i;
    throw UsageError("no arc or crossing named '" + key + "'");
}

int LinkDiagram::arc_colour(size_t i) const
{
    return d_.components[seg_comp_[at_.at(i)[2]]].colour;
}

int LinkDiagram::over_in_position(size_t c) const
{
    return d_.crossings.at(c).sign > 0 ? 1 : 3;
}

int LinkDiagram::over_out_position(size_t c) const
{
    return d_.crossings.at(c).sign > 0 ? 3 : 1;
}

size_t LinkDiagram::component_of_over(size_t c) const
{
    return seg_comp_[at_[c][static_cast<size_t>(over_in_position(c))]];
}

size_t LinkDiagram::component_of_under(size_t c) const
{
    return seg_comp_[at_[c][0]];
}

namespace {

LinkComponent component_from_json(const nlohmann::json& jc, const std::string& loc)
{
    if (!jc.is_object() || !jc.contains("colour") || !jc["colour"].is_number_integer())
        throw ParseError("bad-json", loc, "component needs an integer 'colour'");
    LinkComponent c;
    c.colour = jc["colour"].get<int>();
    if (jc.contains("rot")) {
        if (!jc["rot"].is_number_integer())
            throw ParseError("bad-json", loc + ".rot", "rotation number must be an integer");
        c.rot = jc["rot"].get<int>();
    }
    if (!jc.contains("arc") || !jc["arc"].is_string())
        throw ParseError("bad-json", loc + ".arc", "component needs an 'arc' naming one of its segments");
    c.arc = jc["arc"].get<std::string>();
    return c;
}

}  // namespace

LinkDiagram link_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("bad-json", "", "link diagram must be a JSON object");
    LinkData d;
    if (!j.contains("variables") || !j["variables"].is_array())
        throw ParseError("bad-json", "variables", "expected a list of variable names");
    for (const auto& v : j["variables"]) {
        if (!v.is_string())
            throw ParseError("bad-json", "variables", "variable names must be strings");
        d.variables.push_back(v.get<std::string>());
    }
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("no-components", "components", "missing component list");
    for (size_t k = 0; k < j["components"].size(); ++k)
        d.components.push_back(component_from_json(j["components"][k], "components[" + std::to_string(k) + "]"));
    if (!j.contains("crossings") || !j["crossings"].is_array())
        throw ParseError("no-crossings", "crossings", "missing crossing list");
    for (size_t c = 0; c < j["crossings"].size(); ++c) {
        const auto& jx = j["crossings"][c];
        std::string loc = "crossings[" + std::to_string(c) + "]";
        if (!jx.is_object() || !jx.contains("ends") || !jx["ends"].is_array() || jx["ends"].size() != 4)
            throw ParseError("bad-json", loc, "crossing needs four 'ends'");
        if (!jx.contains("sign") || !jx["sign"].is_number_integer())
            throw ParseError("bad-json", loc + ".sign", "crossing needs an integer 'sign'");
        Crossing x;
        x.id = jx.contains("id") && jx["id"].is_string() ? jx["id"].get<std::string>() : "k" + std::to_string(c + 1);
        x.sign = jx["sign"].get<int>();
        for (size_t p = 0; p < 4; ++p) {
            if (!jx["ends"][p].is_string())
                throw ParseError("bad-json", end_loc(c, p), "arc-end must be a string");
            x.ends[p] = jx["ends"][p].get<std::string>();
        }
        d.crossings.push_back(std::move(x));
    }
    if (j.contains("outer")) {
        const auto& jo = j["outer"];
        if (!jo.is_object() || !jo.contains("arc") || !jo["arc"].is_string())
            throw ParseError("bad-json", "outer", "outer hint needs an 'arc'");
        std::string side = jo.value("side", "right");
        if (side != "left" && side != "right")
            throw ParseError("bad-json", "outer.side", "side must be \"left\" or \"right\"");
        d.outer = OuterHint{jo["arc"].get<std::string>(), side == "right"};
    }
    if (j.contains("words")) {
        VarNames names{d.variables, "t"};
        for (const auto& [key, jw] : j["words"].items()) {
            if (!jw.is_object())
                throw ParseError("bad-json", "words." + key, "word must map variables to integer exponents");
            Monomial m;
            for (const auto& [var, e] : jw.items()) {
                auto k = names.lookup(var);
                if (!k || !e.is_number_integer())
                    throw ParseError("bad-json", "words." + key, "bad word entry '" + var + "'");
                m = m * Monomial::t(*k, e.get<int>());
            }
            d.words[key] = m;
        }
    }
    return LinkDiagram(std::move(d));
}

LinkDiagram parse_link(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("bad-json", "byte " + std::to_string(e.byte), e.what());
    }
    return link_from_json(j);
}

nlohmann::json to_json(const LinkDiagram& ld)
{
    const LinkData& d = ld.data();
    nlohmann::json comps = nlohmann::json::array(), xs = nlohmann::json::array();
    for (const auto& c : d.components) {
        nlohmann::json jc = {{"colour", c.colour}, {"arc", c.arc}};
        if (c.rot)
            jc["rot"] = *c.rot;
        comps.push_back(jc);
    }
    for (const auto& x : d.crossings)
        xs.push_back({{"id", x.id}, {"sign", x.sign}, {"ends", x.ends}});
    nlohmann::json j = {{"variables", d.variables}, {"components", comps}, {"crossings", xs}};
    if (d.outer)
        j["outer"] = {{"arc", d.outer->arc}, {"side", d.outer->right ? "right" : "left"}};
    if (!d.words.empty()) {
        VarNames names = ld.names();
        nlohmann::json jw = nlohmann::json::object();
        for (const auto& [key, m] : d.words) {
            nlohmann::json e = nlohmann::json::object();
            for (const auto& [k, se] : m.exps())
                e[names.name(k)] = se / 2;
            jw[key] = e;
        }
        j["words"] = jw;
    }
    return j;
}

PolyMatrix wirtinger_matrix(const LinkDiagram& d)
{
    if (d.singular())
        throw UsageError("the Wirtinger matrix needs a diagram without double points");
    if (d.split())
        throw UsageError("a component never passes under; the diagram is split");
    int nv = d.nvars();
    size_t n = d.size();
    PolyMatrix m(n, n, nv);
    std::vector<std::string> rows;
    for (const auto& x : d.data().crossings)
        rows.push_back(x.id);
    m.set_row_labels(rows);
    m.set_col_labels(d.arc_labels());
    for (size_t i = 0; i < n; ++i) {
        const Crossing& x = d.data().crossings[i];
        size_t a = d.arc_of_segment(d.segment_at(i, 0));
        size_t b = d.arc_of_segment(d.segment_at(i, d.over_in_position(i)));
        size_t c = d.arc_of_segment(d.segment_at(i, 2));
        MultiPoly tu = MultiPoly::t(d.data().components[d.component_of_under(i)].colour, nv);
        MultiPoly to = MultiPoly::t(d.data().components[d.component_of_over(i)].colour, nv);
        MultiPoly one(1, nv);
        if (x.sign < 0) {
            m.add(i, a, -one);
            m.add(i, b, one - tu);
            m.add(i, c, to);
        } else {
            m.add(i, a, -to);
            m.add(i, b, tu - one);
            m.add(i, c, one);
        }
    }
    return m;
}

Faces trace_faces(const LinkDiagram& d)
{
    size_t n = d.size();
    auto other = [&](size_t c, int p) {
        size_t s = d.segment_at(c, p);
        auto st = d.segment_start(s), en = d.segment_end(s);
        return (st.first == c && st.second == p) ? en : st;
    };
    Faces f;
    f.dart_face.assign(4 * n, SIZE_MAX);
    for (size_t start = 0; start < 4 * n; ++start) {
        if (f.dart_face[start] != SIZE_MAX)
            continue;
        size_t dart = start;
        while (f.dart_face[dart] == SIZE_MAX) {
            f.dart_face[dart] = f.count;
            auto [c, q] = other(dart / 4, static_cast<int>(dart % 4));
            dart = c * 4 + static_cast<size_t>((q + 3) % 4);
        }
        if (dart != start)
            throw DiagramError("face tracing did not close up; the rotational order is inconsistent");
        ++f.count;
    }
    if (f.count != n + 2)
        throw DiagramError("face tracing found " + std::to_string(f.count) + " faces, expected " +
                           std::to_string(n + 2) + "; the diagram is not a connected planar projection");
    if (!d.data().outer)
        throw DiagramError("no outer-face hint");
    size_t s = d.segment_index(d.data().outer->arc);
    auto [c, p] = d.data().outer->right ? d.segment_start(s) : d.segment_end(s);
    f.outer = f.dart_face[c * 4 + static_cast<size_t>(p)];
    return f;
}

Monomial path_word(const LinkDiagram& d, size_t i)
{
    if (i >= d.size())
        throw UsageError("crossing index out of range");
    const auto& words = d.data().words;
    if (!d.arc_labels().empty()) {
        auto it = words.find(d.arc_labels()[i]);
        if (it != words.end())
            return it->second;
    }
    auto it = words.find(d.data().crossings[i].id);
    if (it != words.end())
        return it->second;

    Faces f = trace_faces(d);
    int sign = d.data().crossings[i].sign;
    size_t start = f.dart_face[i * 4 + (sign < 0 ? 0 : 1)];

    struct Step {
        size_t to;
        Monomial m;
    };
    std::vector<std::vector<Step>> adj(f.count);
    for (size_t s = 0; s < d.segment_count(); ++s) {
        int colour = d.data().components[d.segment_component(s)].colour;
        auto [c0, p0] = d.segment_start(s);
        auto [c1, p1] = d.segment_end(s);
        size_t right = f.dart_face[c0 * 4 + static_cast<size_t>(p0)];
        size_t left = f.dart_face[c1 * 4 + static_cast<size_t>(p1)];
        adj[right].push_back({left, Monomial::t(colour, 1)});
        adj[left].push_back({right, Monomial::t(colour, -1)});
    }
    std::vector<std::optional<Monomial>> word(f.count);
    word[start] = Monomial{};
    std::deque<size_t> queue{start};
    while (!queue.empty()) {
        size_t u = queue.front();
        queue.pop_front();
        for (const auto& st : adj[u]) {
            if (word[st.to])
                continue;
            word[st.to] = *word[u] * st.m;
            queue.push_back(st.to);
        }
    }
    return *word[f.outer];
}

std::vector<int> over_counts(const LinkDiagram& d)
{
    std::vector<int> mu(d.component_count(), 0);
    for (size_t c = 0; c < d.size(); ++c)
        if (d.data().crossings[c].sign != 0)
            ++mu[d.component_of_over(c)];
    return mu;
}

std::vector<std::pair<int, int>> mu_rot(const LinkDiagram& d)
{
    std::vector<int> mu = over_counts(d);
    std::vector<std::pair<int, int>> out;
    for (size_t k = 0; k < d.component_count(); ++k)
        out.emplace_back(mu[k], *d.data().components[k].rot);
    return out;
}

std::vector<Rational> implied_rotation_numbers(const LinkDiagram& d)
{
    Faces f = trace_faces(d);
    std::vector<Rational> out;
    for (size_t k = 0; k < d.component_count(); ++k) {
        // winding number of component k around each face
        std::vector<std::vector<std::pair<size_t, int>>> adj(f.count);
        for (size_t s = 0; s < d.segment_count(); ++s) {
            auto [c0, p0] = d.segment_start(s);
            auto [c1, p1] = d.segment_end(s);
            size_t right = f.dart_face[c0 * 4 + static_cast<size_t>(p0)];
            size_t left = f.dart_face[c1 * 4 + static_cast<size_t>(p1)];
            int step = d.segment_component(s) == k ? -1 : 0;
            adj[right].emplace_back(left, step);
            adj[left].emplace_back(right, -step);
        }
        std::vector<std::optional<int>> w(f.count);
        w[f.outer] = 0;
        std::deque<size_t> queue{f.outer};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (auto [v, step] : adj[u]) {
                if (w[v]) {
                    if (*w[v] != *w[u] + step)
                        throw DiagramError("inconsistent winding numbers");
                    continue;
                }
                w[v] = *w[u] + step;
                queue.push_back(v);
            }
        }
        // Each face, segment and crossing of the diagram contributes to the
        // Euler-characteristic count of the regions swept by component k.
        Rational tot = 0;
        for (size_t face = 0; face < f.count; ++face)
            tot -= *w[face];
        for (size_t s = 0; s < d.segment_count(); ++s)
            if (d.segment_component(s) != k) {
                auto [c0, p0] = d.segment_start(s);
                tot += *w[f.dart_face[c0 * 4 + static_cast<size_t>(p0)]];
            }
        for (size_t c = 0; c < d.size(); ++c) {
            std::set<size_t> comps;
            for (int p = 0; p < 4; ++p)
                comps.insert(d.segment_component(d.segment_at(c, p)));
            if (comps.size() == 1 && *comps.begin() == k) {
                Rational avg = 0;
                for (size_t p = 0; p < 4; ++p)
                    avg += *w[f.dart_face[c * 4 + p]];
                tot += avg / 4;
            } else if (!comps.count(k)) {
                tot -= *w[f.dart_face[c * 4]];
            }
        }
        out.push_back(tot);
    }
    return out;
}

MvaResult mva(const LinkDiagram& d, size_t i, std::optional<size_t> j)
{
    if (d.singular())
        throw UsageError("mva needs a diagram without double points; resolve it first");
    if (i >= d.size() || (j && *j >= d.size()))
        throw UsageError("arc index out of range");
    MvaResult r;
    r.i = i;
    r.j = j.value_or(i);
    r.knot = d.knot();
    r.split = d.split();
    int nv = d.nvars();
    for (const auto& [mu, rot] : mu_rot(d)) {
        r.mu.push_back(mu);
        r.rot.push_back(rot);
    }
    if (r.split) {
        r.value = MultiPoly::zero(nv);
        r.det = MultiPoly::zero(nv);
        return r;
    }
    PolyMatrix m = wirtinger_matrix(d);
    r.det = det(m.without(r.i, r.j));
    r.word = path_word(d, i);

    Monomial norm;
    for (size_t k = 0; k < d.component_count(); ++k)
        norm = norm * Monomial::s(d.data().components[k].colour, r.rot[k] - r.mu[k]);
    MultiPoly val = r.det.times(norm * r.word.inverse());
    if ((r.i + r.j) % 2)
        val = -val;
    MultiPoly ti_minus_1 = MultiPoly::t(d.arc_colour(r.j), nv) - MultiPoly(1, nv);
    if (r.knot) {
        r.value = val;
        r.knot_times = val * ti_minus_1;
        try {
            r.knot_divided = div_exact(val, ti_minus_1);
        } catch (const DivisionError&) {
        }
    } else {
        r.value = div_exact(val, ti_minus_1);
    }
    return r;
}

}  // namespace mva
