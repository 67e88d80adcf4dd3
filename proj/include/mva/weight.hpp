#pragma once

#include <string>
#include <vector>

#include "mva/chord.hpp"
#include "mva/matrix.hpp"

namespace mva {

// M(D): one row and column per arc. For a chord with side-A endpoint
// (inA -> outA, colour cA) and side-B endpoint (inB -> outB, colour cB):
//   row outA: +1/2 at outA, outB and -1/2 at inA, inB
//   row outB: +t_cB at outA, inA and -t_cA at outB, inB
// A subdivision point adds row out: +1 at out, -1 at in. Entries accumulate.
// The marked point's out-arc row stays empty.
PolyMatrix build_matrix(const ChordDiagram& d);

struct WeightResult {
    MultiPoly weight;
    MultiPoly det;       // det(M_i^i) before division by t_i
    PolyMatrix matrix;   // full M(D), before deletion
    int marked_colour = 0;
    size_t marked_arc = 0;
    size_t chords = 0;
};

WeightResult weight(const ChordDiagram& d);

struct InvarianceEntry {
    std::string variant;
    MultiPoly value;
    bool equal = false;
};

struct InvarianceReport {
    MultiPoly base;
    std::vector<InvarianceEntry> side_swaps;
    std::vector<InvarianceEntry> marked_moves;  // recorded, not asserted
    std::vector<InvarianceEntry> subdivisions;
    bool asserted_ok() const;
};

InvarianceReport weight_invariance_report(const ChordDiagram& d);

}  // namespace mva
