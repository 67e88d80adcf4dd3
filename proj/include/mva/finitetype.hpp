#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mva/chord.hpp"
#include "mva/link.hpp"
#include "mva/series.hpp"

namespace mva {

struct ResolvedTerm {
    int sign = 1;
    std::vector<int> choice;  // +1 / -1 per double point, in crossing order
    LinkDiagram diagram;
};

struct ResolutionSum {
    std::vector<ResolvedTerm> terms;
};

// A double point [s1-in, s2-out, s1-out, s2-in] becomes the positive crossing
// [s2-in, s1-in, s2-out, s1-out] or the negative crossing with unchanged ends.
// Choices run through (+,-)^m with the first double point most significant.
ResolutionSum resolve(const LinkDiagram& s);

// One circle per component, one chord per double point. Each component is
// read from its listed segment; strand s1 of a double point is side A. The
// marked point sits at the start of the first component's listed segment.
ChordDiagram underlying_chord_diagram(const LinkDiagram& s);

struct TheoremCheck {
    enum class Verdict { Equal, UpToSign, Mismatch };

    ChordDiagram diagram;
    size_t m = 0;
    int cap = 0;
    bool knot = false;
    std::vector<MultiPoly> term_values;
    // alternating sum of the resolutions' values; for knots divided by (t - 1)
    MultiPoly sum;
    bool parity_ok = false;          // the sum vanishes at every t_k = 1
    std::vector<MultiPoly> parts;    // homogeneous parts of degree 0..cap after x_k = exp(t_k)
    std::optional<int> first_nonzero_degree;
    bool lower_vanish = false;       // parts below m - 1 are zero
    MultiPoly coefficient;           // the degree m - 1 part
    MultiPoly weight;
    Verdict verdict = Verdict::Mismatch;

    // +1 for equal, -1 for equal up to sign, 0 otherwise
    int sign() const;
};

std::string verdict_name(TheoremCheck::Verdict v);

TheoremCheck verify_theorem(const LinkDiagram& s, std::optional<int> cap = std::nullopt);

}  // namespace mva
