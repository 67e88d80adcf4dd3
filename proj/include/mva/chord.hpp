#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mva/errors.hpp"
#include "mva/text.hpp"

namespace mva {

struct Site {
    enum class Kind { ChordEnd, Marked, Subdivision };
    Kind kind = Kind::Subdivision;
    std::string chord;  // ChordEnd only
    char side = 'A';    // ChordEnd only

    static Site end(std::string chord, char side) { return {Kind::ChordEnd, std::move(chord), side}; }
    static Site marked() { return {Kind::Marked, {}, 'A'}; }
    static Site sub() { return {Kind::Subdivision, {}, 'A'}; }
    bool operator==(const Site&) const = default;
};

struct ChordComponent {
    int colour = 1;
    std::vector<Site> sites;  // cyclic order along the component's orientation
    bool operator==(const ChordComponent&) const = default;
};

// Arcs are numbered in reading order: component by component, the out-arc of
// each site in listing order. The arc following site j is labelled a<index+1>.
struct ArcTable {
    std::vector<std::string> labels;
    std::vector<int> colour;
    std::vector<size_t> component;
    size_t marked = 0;
    size_t size() const { return labels.size(); }
};

struct ChordEnds {
    size_t comp_a = 0, site_a = 0;
    size_t comp_b = 0, site_b = 0;
};

class ChordDiagram {
public:
    std::vector<std::string> variables;
    std::vector<ChordComponent> components;

    int nvars() const { return static_cast<int>(variables.size()); }
    VarNames names() const { return VarNames{variables, "t"}; }

    // throws ParseError on invariant violations
    void validate() const;

    size_t arc_count() const;
    size_t out_arc(size_t comp, size_t site) const;
    size_t in_arc(size_t comp, size_t site) const;
    ArcTable arcs() const;
    std::pair<size_t, size_t> site_of_arc(size_t arc) const;
    // chords keyed by id, ordered by first appearance in reading order
    std::vector<std::pair<std::string, ChordEnds>> chords() const;
    size_t chord_count() const;

    bool operator==(const ChordDiagram&) const = default;
};

ChordDiagram chord_diagram_from_json(const nlohmann::json& j);
ChordDiagram parse_chord_diagram(const std::string& text);
nlohmann::json to_json(const ChordDiagram& d);
std::string serialize_chord_diagram(const ChordDiagram& d);

// Insert a subdivision point in the middle of the named arc ("a4").
ChordDiagram subdivide(const ChordDiagram& d, const std::string& arc);
ChordDiagram swap_sides(const ChordDiagram& d, const std::string& chord);
// Move the marked point so that it sits before site `pos` of its component
// (positions counted with the marked point removed).
ChordDiagram move_marked(const ChordDiagram& d, size_t pos);

// Every pairing of 2m chord endpoints spread over components with the given
// colours, each component carrying at least one endpoint. The marked point is
// the first site of component `marked` (all components when marked < 0).
// Side A is the endpoint met first in reading order.
std::vector<ChordDiagram> enumerate_diagrams(int m, const std::vector<int>& colours, int marked = -1);

// A chord whose endpoints are adjacent among chord endpoints on one side.
bool has_isolated_chord(const ChordDiagram& d);

// 4T quadruple: chord p joins gaps g1,g2; chord q has its free end in g3 and
// its other end next to p's end in g1 (terms 1,2) or g2 (terms 3,4).
// D1 - D2 + D3 - D4 = 0 for any weight system. A gap (c, j) is the position
// before site j of component c (j == size means the end of the list).
struct Gap {
    size_t comp = 0;
    size_t pos = 0;
    bool operator==(const Gap&) const = default;
};
std::vector<Gap> gaps(const ChordDiagram& d);
std::vector<ChordDiagram> four_term(const ChordDiagram& base, Gap g1, Gap g2, Gap g3);

}  // namespace mva
