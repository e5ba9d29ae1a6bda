#ifndef STSURF_CANONICAL_HPP
#define STSURF_CANONICAL_HPP

#include "stsurf/permutation.hpp"

#include <utility>

namespace stsurf {

// Canonical form of a transitive pair (h, v) under simultaneous conjugation.
// Two pairs are simultaneously conjugate iff their canonical forms are equal.
//
// For n <= 12 this is the lexicographically minimal simultaneous conjugate
// (minimizing the concatenation of the image sequences of h then v over all
// relabelings), found by branch-and-bound.  For larger n it is the minimum
// over the n breadth-first relabelings, one per start square, which is the
// usual origami normal form; still a complete conjugacy invariant, just not
// the global lexicographic minimum.
std::pair<Permutation, Permutation> canonical_form(const Permutation& h, const Permutation& v);

// The breadth-first normal form alone (any n).
std::pair<Permutation, Permutation> bfs_canonical_form(const Permutation& h, const Permutation& v);

} // namespace stsurf

#endif
