#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mva/matrix.hpp"
#include "mva/text.hpp"

namespace mva {

// A crossing lists the four diagram segments meeting at it, clockwise,
// starting with the incoming under-segment:
//   sign +1: [under-in, over-in,  under-out, over-out]
//   sign -1: [under-in, over-out, under-out, over-in]
//   sign  0 (double point): [s1-in, s2-out, s1-out, s2-in]
// A segment runs between two consecutive crossings, so every segment name
// appears once as an incoming end and once as an outgoing end.
struct Crossing {
    std::string id;
    int sign = 1;
    std::array<std::string, 4> ends;
};

struct LinkComponent {
    int colour = 1;
    std::optional<int> rot;
    std::string arc;  // any segment on the component
};

struct OuterHint {
    std::string arc;   // a segment bounding the unbounded face
    bool right = true; // which side of the segment, facing along its orientation
};

struct LinkData {
    std::vector<std::string> variables;
    std::vector<LinkComponent> components;
    std::vector<Crossing> crossings;
    std::optional<OuterHint> outer;
    std::map<std::string, Monomial> words;  // keyed by arc label or crossing id
};

class LinkDiagram {
public:
    explicit LinkDiagram(LinkData d);

    const LinkData& data() const { return d_; }
    int nvars() const { return static_cast<int>(d_.variables.size()); }
    VarNames names() const { return VarNames{d_.variables, "t"}; }
    size_t size() const { return d_.crossings.size(); }
    size_t component_count() const { return d_.components.size(); }
    bool knot() const { return d_.components.size() == 1; }
    size_t double_points() const;
    bool singular() const { return double_points() > 0; }
    // some component never passes under: the link splits off that component
    bool split() const { return split_; }

    size_t segment_count() const { return seg_names_.size(); }
    const std::string& segment_name(size_t s) const { return seg_names_[s]; }
    size_t segment_at(size_t crossing, int pos) const { return at_[crossing][static_cast<size_t>(pos)]; }
    std::pair<size_t, int> segment_start(size_t s) const { return start_[s]; }
    std::pair<size_t, int> segment_end(size_t s) const { return end_[s]; }
    size_t segment_component(size_t s) const { return seg_comp_[s]; }
    size_t segment_index(const std::string& name) const;

    // Wirtinger arcs: arc i starts as the outgoing under-segment of crossing i
    // and continues through over-passes. Defined for non-singular diagrams.
    const std::vector<std::string>& arc_labels() const { return arc_labels_; }
    size_t arc_of_segment(size_t s) const;
    size_t arc_index(const std::string& label_or_crossing_id) const;
    int arc_colour(size_t i) const;

    int over_in_position(size_t crossing) const;
    int over_out_position(size_t crossing) const;
    size_t component_of_over(size_t crossing) const;
    size_t component_of_under(size_t crossing) const;

    // the position a strand leaves through after entering at pos
    static int continuation(int sign, int pos);
    static bool incoming(int sign, int pos);

private:
    LinkData d_;
    std::vector<std::string> seg_names_;
    std::map<std::string, size_t> seg_index_;
    std::vector<std::array<size_t, 4>> at_;
    std::vector<std::pair<size_t, int>> start_, end_;
    std::vector<size_t> seg_comp_;
    std::vector<long> seg_arc_;
    std::vector<std::string> arc_labels_;
    bool split_ = false;
};

LinkDiagram link_from_json(const nlohmann::json& j);
LinkDiagram parse_link(const std::string& text);
nlohmann::json to_json(const LinkDiagram& d);

// Rows indexed by crossings, columns by arcs. With x the colour of the under
// strand and y that of the over strand, a crossing with incoming under arc a,
// over arc b and outgoing under arc c contributes
//   sign -1:  a: -1,  b: 1 - x,  c: y
//   sign +1:  a: -y,  b: x - 1,  c: 1
PolyMatrix wirtinger_matrix(const LinkDiagram& d);

struct Faces {
    std::vector<size_t> dart_face;  // index crossing*4 + pos
    size_t count = 0;
    size_t outer = 0;
};

// Faces of the planar diagram traced over crossing corners; the unbounded
// face comes from the outer hint. Throws DiagramError unless the trace gives
// crossings + 2 faces.
Faces trace_faces(const LinkDiagram& d);

// Walk from the corner beside crossing i to the unbounded face. The corner is
// the one between ends[0] and ends[1] for sign -1 and between ends[1] and
// ends[2] for sign +1. Stepping over a strand of colour k from its right side
// to its left side contributes t_k, the opposite direction t_k^-1.
Monomial path_word(const LinkDiagram& d, size_t i);

std::vector<int> over_counts(const LinkDiagram& d);
// per component (mu(k), rot(k)), rot echoed from the input
std::vector<std::pair<int, int>> mu_rot(const LinkDiagram& d);
// rotation numbers implied by the planar embedding (counterclockwise positive)
std::vector<Rational> implied_rotation_numbers(const LinkDiagram& d);

struct MvaResult {
    MultiPoly value;
    MultiPoly det;   // det(M_i^j)
    Monomial word;   // w_i
    std::vector<int> mu;
    std::vector<int> rot;
    size_t i = 0, j = 0;
    bool knot = false;
    bool split = false;
    // knots: the value without the (t-1) division, plus the two readings
    // of "differs by a factor of t-1"
    std::optional<MultiPoly> knot_times;
    std::optional<MultiPoly> knot_divided;
};

// Delta(L) = (-1)^(i+j) det(M_i^j) / (w_i (t_i - 1)) * prod_k t_k^((rot(k)-mu(k))/2)
// where row i belongs to crossing i, column j to arc j, and t_i is the colour
// of the deleted arc j (the two agree when j = i). For knots the (t_i - 1)
// division is skipped.
// A split diagram returns 0.
MvaResult mva(const LinkDiagram& d, size_t i, std::optional<size_t> j = std::nullopt);

}  // namespace mva
