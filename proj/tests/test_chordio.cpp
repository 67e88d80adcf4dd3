#include <doctest.h>

#include <set>

#include "mva/chord.hpp"
#include "mva/weight.hpp"
#include "support.hpp"

using namespace mva;

namespace {

std::string parse_code(const std::string& text)
{
    try {
        parse_chord_diagram(text);
    } catch (const ParseError& e) {
        return e.code;
    }
    return "";
}

const char* one_chord = R"({"variables": ["t1"], "components": [
  {"colour": 1, "sites": [{"marked": true}, {"chord": "c1", "side": "A"}, {"chord": "c1", "side": "B"}]}]})";

}  // namespace

TEST_CASE("arc numbering")
{
    ChordDiagram d = parse_chord_diagram(fixture("s5.json"));
    CHECK(d.arc_count() == 7);
    CHECK(d.chord_count() == 3);
    ArcTable t = d.arcs();
    CHECK(t.labels.front() == "a1");
    CHECK(t.labels.back() == "a7");
    CHECK(t.marked == 0);
    CHECK(t.colour == std::vector<int>{1, 1, 2, 2, 2, 2, 2});

    ChordDiagram e = parse_chord_diagram(one_chord);
    CHECK(e.arc_count() == 3);
    CHECK(e.chords().size() == 1);
}

TEST_CASE("malformed diagrams are rejected with distinct codes")
{
    CHECK(parse_code(R"({"variables": ["t1"], "components": [{"colour": 1, "sites": [{"marked": true},
        {"marked": true}, {"chord": "c1", "side": "A"}, {"chord": "c1", "side": "B"}]}]})") == "marked-count");
    CHECK(parse_code(R"({"variables": ["t1"], "components": [{"colour": 1, "sites": [{"marked": true},
        {"chord": "c1", "side": "A"}]}]})") == "dangling-chord");
    CHECK(parse_code(R"({"variables": ["t1"], "components": [{"colour": 1, "sites": [{"marked": true},
        {"chord": "c1", "side": "A"}, {"chord": "c1", "side": "B"}]}, {"colour": 1, "sites": []}]})") ==
          "empty-component");
    CHECK(parse_code(R"({"variables": ["t1"], "components": [{"colour": 2, "sites": [{"marked": true},
        {"chord": "c1", "side": "A"}, {"chord": "c1", "side": "B"}]}]})") == "unknown-colour");
    CHECK(parse_code("[1, 2") == "bad-json");
    CHECK(parse_code(one_chord).empty());
}

TEST_CASE("subdivision adds an arc and keeps the weight")
{
    ChordDiagram d = parse_chord_diagram(fixture("s5.json"));
    ChordDiagram s = subdivide(d, "a4");
    CHECK(s.arc_count() == 8);
    CHECK(weight(s).weight == weight(d).weight);
    CHECK_THROWS(subdivide(d, "a9"));
}

TEST_CASE("side swap and marked-point moves stay valid")
{
    ChordDiagram d = parse_chord_diagram(fixture("s5.json"));
    ChordDiagram s = swap_sides(d, "c2");
    CHECK_NOTHROW(s.validate());
    CHECK(swap_sides(s, "c2") == d);
    ChordDiagram m = move_marked(d, 1);
    CHECK_NOTHROW(m.validate());
    CHECK(m.components[0].sites[1].kind == Site::Kind::Marked);
}

TEST_CASE("enumeration")
{
    CHECK(enumerate_diagrams(1, {1}, 0).size() == 1);
    auto two = enumerate_diagrams(2, {1}, 0);
    CHECK(two.size() == 3);
    std::set<std::string> distinct;
    for (const auto& d : two) {
        CHECK_NOTHROW(d.validate());
        distinct.insert(serialize_chord_diagram(d));
    }
    CHECK(distinct.size() == 3);
    // every component carries an endpoint: one chord across two circles
    CHECK(enumerate_diagrams(1, {1, 2}, 0).size() == 1);
    CHECK(enumerate_diagrams(1, {1, 2}).size() == 2);
}

TEST_CASE("isolated chords and gaps")
{
    ChordDiagram e = parse_chord_diagram(one_chord);
    CHECK(has_isolated_chord(e));
    CHECK_FALSE(has_isolated_chord(parse_chord_diagram(fixture("s5.json"))));
    CHECK(gaps(e).size() == 3);
}

TEST_CASE("serialization round trip")
{
    ChordDiagram d = parse_chord_diagram(fixture("s5.json"));
    CHECK(parse_chord_diagram(serialize_chord_diagram(d)) == d);
    for (const auto& x : enumerate_diagrams(3, {1, 2}))
        CHECK(parse_chord_diagram(serialize_chord_diagram(x)) == x);
}
