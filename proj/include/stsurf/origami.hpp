#ifndef STSURF_ORIGAMI_HPP
#define STSURF_ORIGAMI_HPP

#include "stsurf/permutation.hpp"
#include "stsurf/representative.hpp"
#include "stsurf/stratum.hpp"

#include <vector>

namespace stsurf {

// A square-tiled surface: n unit squares, h(i) the square to the right of i,
// v(i) the square on top of i, considered up to simultaneous conjugation.
// The pair must act transitively (connected surface).
struct Origami {
    Permutation h;
    Permutation v;

    Origami(Permutation h_, Permutation v_);

    int n() const { return h.degree(); }
    // v^-1 h^-1 v h: the cycle through i is the grid vertex at the top-right
    // corner of square i.  Conjugate to the commutator, so same cycle type.
    Permutation corner_permutation() const;
    Origami canonical() const;

    bool operator==(const Origami& o) const { return h == o.h && v == o.v; }
};

// Zero orders from the commutator's nontrivial cycles (length l gives a zero
// of order l-1); fixed points are marked points.
StratumSpec stratum_of(const Origami& o);

enum class Direction { horizontal, vertical };

struct Cylinder {
    int circumference = 0;
    int height = 0;
    std::vector<std::vector<int>> rows;  // constituent rows (or columns)
};

struct CylinderDecomposition {
    Direction direction;
    std::vector<Cylinder> cylinders;
};

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction d);
bool is_one_one(const Origami& o);

// Side counts of the boundary components of the ribbon graph of the diagram
// with vertices the squares and edges i->h(i), i->v(i), traced from the
// rotation system (E, N, W, S counterclockwise at every vertex).  Each count
// is divisible by 4; a 4k-sided boundary corresponds to a zero of order k-1.
// Sorted descending.
std::vector<int> ribbon_boundaries(const Origami& o);

// True iff the surface admits an isometric involution with exactly 2g+2
// fixed points (genus >= 2).  Searched over the finitely many candidate
// square permutations sigma with sigma h sigma^-1 = h^-1 and
// sigma v sigma^-1 = v^-1; fixed points counted geometrically over the four
// species (square centers, vertical and horizontal edge midpoints, grid
// vertices).
bool is_hyperelliptic(const Origami& o);

// Build the surface of a one-cylinder representative: h = (1,2,...,N) and
// v the inverse of the de-zeroed positional map.
Origami from_representative(const Representative& rep);
// Inverse direction; requires h to be a single n-cycle.  Returns the
// canonical rotation.
Representative to_representative(const Origami& o);

} // namespace stsurf

#endif
