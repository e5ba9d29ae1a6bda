#ifndef STSURF_COMBINATORS_HPP
#define STSURF_COMBINATORS_HPP

#include "stsurf/representative.hpp"
#include "stsurf/stratum.hpp"

#include <vector>

namespace stsurf {

// Cylinder concatenation of two normal-form one-cylinder surfaces (top row
// starting 0,1,2 and bottom row starting 2; the one-square torus counts as a
// degenerate normal form).  The result has the zeros of both factors, genus
// g1+g2-1, N+M squares, and is again 1,1 and normal form.
Representative concat(const Representative& a, const Representative& b);

// Spin parity of a concatenation of two all-even-zero factors with parities
// eps and eta: eps + eta + 1 mod 2.
int predict_parity(int eps, int eta);
// n-fold corollary: sum of parities + (blocks - 1) mod 2.
int predict_parity(const std::vector<int>& parities);

// Concatenate, then swap the first square of the second factor with its
// right (resp. left) neighbour while keeping the vertical identifications
// attached to the squares: v is conjugated by the adjacent transposition at
// the junction, h is unchanged.
Representative right_swap_concat(const Representative& a, const Representative& b);
Representative left_swap_concat(const Representative& a, const Representative& b);

// Five-square surgery at the wrap-around vertical edge: adds one zero of
// order 2 and raises the order of the zero leaving the diagram on the bottom
// by 2; preserves 1,1, normal form, and spin parity where defined.
Representative order2_gadget(const Representative& rep);

// The zero order whose order increases under order2_gadget, found by
// applying the gadget and diffing the strata.
int bottom_leaving_zero(const Representative& rep);

// Splitting a side label: +1 square, +1 marked point, stratum and cylinder
// structure unchanged (validated; throws if the chosen symbol breaks the
// single-cylinder property).
Representative add_marked_point(const Representative& rep, int symbol);

// Six-square surgery turning an H(2k+1,1) surface into a minimal 1,1 surface
// in H(2k+3,1,1,1).  The wiring was found once by exhaustive search over the
// insertion orders satisfying the contract and is frozen as data.
Representative h11_gadget(const Representative& rep);

namespace detail {
// Insert fresh symbols into the vertical cycle at the wrap-around edge
// x -> 1 (x = m^-1(1)): the edge is rerouted through the listed new symbols,
// given as offsets 1..k meaning N+1..N+k.  Single-cycle maps stay single
// cycles.
Representative insert_at_wrap(const Representative& rep, const std::vector<int>& rel_order);
}

} // namespace stsurf

#endif
