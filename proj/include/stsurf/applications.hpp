#ifndef STSURF_APPLICATIONS_HPP
#define STSURF_APPLICATIONS_HPP

#include "stsurf/planner.hpp"
#include "stsurf/representative.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stsurf {

// Minimal geometric intersection number of a filling pair on the genus-g
// surface with p punctures.  Throws for the undefined cases (g = 0, p < 4).
int min_filling_intersections(int g, int p);

// A decomposition of S_{g,p} into 4k-gons compatible with a filling pair of
// n intersections: m = n+2-2g polygons, sum of (k_i - 1) = 2g-2, p <= m.
struct CompatibleDecomposition {
    int genus = 1;
    int punctures = 0;
    int intersections = 1;
    std::vector<int> polygon_sides;  // each divisible by 4, sorted descending

    // Throws std::invalid_argument when the arithmetic does not hold.
    void validate() const;
};

struct FillingPairSurface {
    Representative rep;
    Recipe recipe;
    std::vector<int> region_sides;     // from ribbon_boundaries, descending
    std::vector<int> puncture_region;  // region index per puncture
};

// Realizes the decomposition by the core curves of a 1,1-square-tiled
// surface: algebraic = geometric intersection number = n.  Punctures go to
// distinct regions, largest first.  Throws for infeasible decompositions; in
// particular the genus-2 decompositions {8,8} and {8,8,4} are rejected, since
// a 1,1 surface in H(1,1) needs at least 6 squares.
FillingPairSurface build_filling_pair(const CompatibleDecomposition& d);

// True for the decompositions the genus-2 obstruction rules out.
bool genus2_obstructed(const CompatibleDecomposition& d);

struct ThurstonResult {
    std::int64_t trace = 0;  // absolute value
    bool pseudo_anosov = false;
    double dilatation = 1.0;
    double log_dilatation = 0.0;
};

// Word in the two Dehn twists along the core curves of a 1,1 surface with n
// squares, acting on the cylinder directions as [[1,n],[0,1]] and
// [[1,0],[-n,1]].  Entries are ('a'|'b', exponent).  Pseudo-Anosov iff
// |trace| > 2; then the dilatation is the larger root of x^2 - |tr| x + 1.
ThurstonResult thurston_dilatation(const std::vector<std::pair<char, int>>& word, std::int64_t n);

// "a1,b-1,a2" -> {('a',1),('b',-1),('a',2)}
std::vector<std::pair<char, int>> parse_twist_word(const std::string& text);

} // namespace stsurf

#endif
