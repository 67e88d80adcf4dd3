#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mva/chord.hpp"
#include "mva/matrix.hpp"

namespace mva {

struct Tally {
    std::string name;
    size_t checked = 0;
    size_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
    void record(bool pass, const std::string& what);
};

// Colourings with at most two components: {1}, {1,2}, {1,1}.
std::vector<std::vector<int>> small_colourings();

// Every diagram with 1..max_chords chords on the small colourings, the marked
// point on each component in turn.
std::vector<ChordDiagram> small_diagrams(int max_chords);

// Exhaustive weight properties over small_diagrams(max_chords):
//   divisibility of det(M_i^i) by t_i, homogeneity of degree m-1,
//   side-swap and subdivision invariance, vanishing on isolated chords,
//   and the 4T relation over every base with at most max_chords-2 chords.
std::vector<Tally> chord_property_suite(int max_chords);

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_terms, int min_exp, int max_exp, bool half_steps);
PolyMatrix random_sparse_matrix(std::mt19937_64& rng, size_t n, int nvars, double density);

// det via Laplace expansion against Bareiss elimination.
Tally det_cross_check(size_t count, uint64_t seed);
// exp substitution respects sums and products up to the truncation degree.
Tally series_homomorphism_check(size_t count, uint64_t seed);
// det of the stacked block matrix against the signed minor expansion.
Tally block_expansion_check(size_t count, uint64_t seed);

}  // namespace mva
