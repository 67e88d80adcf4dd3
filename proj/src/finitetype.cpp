#include "mva/finitetype.hpp"

#include <future>

#include "mva/weight.hpp"

namespace mva {

ResolutionSum resolve(const LinkDiagram& s)
{
    std::vector<size_t> doubles;
    for (size_t c = 0; c < s.size(); ++c)
        if (s.data().crossings[c].sign == 0)
            doubles.push_back(c);
    if (doubles.empty())
        throw UsageError("diagram has no double points to resolve");

    ResolutionSum out;
    size_t m = doubles.size();
    for (size_t code = 0; code < (size_t{1} << m); ++code) {
        LinkData d = s.data();
        ResolvedTerm term{1, {}, s};
        for (size_t k = 0; k < m; ++k) {
            bool negative = (code >> (m - 1 - k)) & 1;
            Crossing& x = d.crossings[doubles[k]];
            if (negative) {
                x.sign = -1;
                term.sign = -term.sign;
                term.choice.push_back(-1);
            } else {
                x.ends = {x.ends[3], x.ends[0], x.ends[1], x.ends[2]};
                x.sign = 1;
                term.choice.push_back(1);
            }
        }
        term.diagram = LinkDiagram(std::move(d));
        out.terms.push_back(std::move(term));
    }
    return out;
}

ChordDiagram underlying_chord_diagram(const LinkDiagram& s)
{
    ChordDiagram cd;
    cd.variables = VarNames::defaults(s.nvars()).names;
    for (size_t k = 0; k < s.component_count(); ++k) {
        const LinkComponent& comp = s.data().components[k];
        ChordComponent circle;
        circle.colour = comp.colour;
        if (k == 0)
            circle.sites.push_back(Site::marked());
        size_t first = s.segment_index(comp.arc), seg = first;
        do {
            auto [c, p] = s.segment_end(seg);
            const Crossing& x = s.data().crossings[c];
            if (x.sign == 0)
                circle.sites.push_back(Site::end(x.id, p == 0 ? 'A' : 'B'));
            seg = s.segment_at(c, LinkDiagram::continuation(x.sign, p));
        } while (seg != first);
        cd.components.push_back(std::move(circle));
    }
    cd.validate();
    return cd;
}

int TheoremCheck::sign() const
{
    switch (verdict) {
    case Verdict::Equal:
        return 1;
    case Verdict::UpToSign:
        return -1;
    default:
        return 0;
    }
}

std::string verdict_name(TheoremCheck::Verdict v)
{
    switch (v) {
    case TheoremCheck::Verdict::Equal:
        return "equal";
    case TheoremCheck::Verdict::UpToSign:
        return "equal-up-to-sign";
    default:
        return "mismatch";
    }
}

TheoremCheck verify_theorem(const LinkDiagram& s, std::optional<int> cap)
{
    TheoremCheck r;
    r.m = s.double_points();
    r.cap = cap.value_or(static_cast<int>(r.m));
    r.knot = s.knot();
    if (r.m == 0)
        throw UsageError("verify-theorem needs a diagram with double points");
    if (r.cap < static_cast<int>(r.m))
        throw UsageError("degree cap must be at least the number of double points");
    r.diagram = underlying_chord_diagram(s);

    ResolutionSum rs = resolve(s);
    std::vector<std::future<MultiPoly>> jobs;
    for (const auto& term : rs.terms)
        jobs.push_back(std::async(std::launch::async, [&term] { return mva(term.diagram, 0).value; }));
    int nv = s.nvars();
    r.sum = MultiPoly::zero(nv);
    for (size_t k = 0; k < jobs.size(); ++k) {
        r.term_values.push_back(jobs[k].get());
        if (rs.terms[k].sign > 0)
            r.sum += r.term_values.back();
        else
            r.sum -= r.term_values.back();
    }
    r.parity_ok = r.sum.sum_of_coefficients() == 0;
    if (r.knot)
        r.sum = div_exact(r.sum, MultiPoly::t(s.data().components[0].colour, nv) - MultiPoly(1, nv));

    TruncatedSeries series = series_exp_substitute(r.sum, r.cap);
    r.lower_vanish = true;
    for (int deg = 0; deg <= r.cap; ++deg) {
        r.parts.push_back(series.part(deg));
        if (!r.parts.back().is_zero() && !r.first_nonzero_degree)
            r.first_nonzero_degree = deg;
        if (deg < static_cast<int>(r.m) - 1 && !r.parts.back().is_zero())
            r.lower_vanish = false;
    }
    r.coefficient = r.parts[r.m - 1];
    r.weight = weight(r.diagram).weight;
    if (r.coefficient == r.weight)
        r.verdict = TheoremCheck::Verdict::Equal;
    else if (r.coefficient == -r.weight)
        r.verdict = TheoremCheck::Verdict::UpToSign;
    else
        r.verdict = TheoremCheck::Verdict::Mismatch;
    return r;
}

}  // namespace mva
