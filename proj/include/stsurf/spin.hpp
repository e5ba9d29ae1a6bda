#ifndef STSURF_SPIN_HPP
#define STSURF_SPIN_HPP

#include "stsurf/origami.hpp"

#include <vector>

namespace stsurf {

// A closed walk of unit moves through square centers, reduced (no immediate
// backtracking, also cyclically).  Moves: 0=E, 1=N, 2=W, 3=S; moving E from
// square i lands in h(i), moving N lands in v(i).
struct CycleWithIndex {
    int start = 0;
    std::vector<int> moves;
    int index = 0;  // (left quarter-turns - right quarter-turns) / 4

    // Builds the walk, verifies it closes up on the surface, reduces it and
    // computes the turning index.
    static CycleWithIndex trace(const Origami& o, int start, std::vector<int> moves);
};

// Fundamental cycles of a spanning tree of the dual graph (vertices the
// squares, edges i->h(i) and i->v(i)); one per non-tree edge, so n+1 cycles.
// Each is a simple closed curve on the surface.
std::vector<CycleWithIndex> cycle_basis(const Origami& o);

// Parity of the quadratic form on one cycle: ind + 1 mod 2.  Well-defined
// only when every zero order of the ambient origami is even.
int omega(const Origami& o, const CycleWithIndex& c);

// Mod-2 intersection number of two cycles on the same origami.  The second
// curve is translated by the symbolic offset (eps, eps^2); inside each square
// the passages are chords between side points and two chords cross iff their
// endpoints interleave on the boundary.
int intersection_mod2(const Origami& o, const CycleWithIndex& a, const CycleWithIndex& b);

// The quadratic space of the canonical spin structure over GF(2).
struct QuadraticSpace {
    std::vector<CycleWithIndex> basis;
    std::vector<int> omega_values;           // per basis cycle
    std::vector<std::vector<int>> gram;      // mod-2 intersection matrix

    static QuadraticSpace build(const Origami& o);
    // Omega extended to a combination by the quadratic rule
    // Omega(a+b) = Omega(a) + Omega(b) + a.b.
    int omega_of(const std::vector<int>& coords) const;
};

// Arf invariant of the canonical spin structure: quotient by the radical of
// the Gram form, extract a symplectic basis by Gram-Schmidt over GF(2), and
// return sum of Omega(a_i) Omega(b_i) mod 2.  Requires all zero orders even
// and genus >= 2.
int spin_parity(const Origami& o);

} // namespace stsurf

#endif
