#ifndef STSURF_PLANNER_HPP
#define STSURF_PLANNER_HPP

#include "stsurf/catalog.hpp"
#include "stsurf/origami.hpp"
#include "stsurf/representative.hpp"
#include "stsurf/stratum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stsurf {

// One step of a construction: the operation, a human-readable parameter
// string, the produced surface and what it must classify as.  Replaying a
// recipe means classifying every stored step and checking the expectations.
struct RecipeStep {
    std::string op;      // "catalog", "concat", "rswap", "lswap", "gadget2", "h11", "mark"
    std::string detail;
    std::string rep_text;
    StratumSpec stratum;
    ComponentLabel component;
    int squares = 0;
};

struct Recipe {
    std::vector<RecipeStep> steps;
};

struct ConstructResult {
    Representative rep;
    Recipe recipe;
};

// A 1,1-square-tiled surface in the requested connected component with the
// minimal possible number of squares (2g+n-2 plus marked points; 4g-4 and
// 4g-2 for the hyperelliptic components).  Throws std::invalid_argument for
// inadmissible (stratum, component); internal assembly mismatches throw
// std::logic_error, never return a wrong surface.
ConstructResult construct(const StratumSpec& s, ComponentLabel c);

// Replays a recipe: classifies every step's stored surface and checks the
// recorded expectations.  Throws on mismatch.
void replay(const Recipe& r);

// Backtracking search over v with h fixed as the n-cycle, pruned by the
// partial commutator cycle structure; returns the first 1,1 origami whose
// zero orders match s and whose component is c, or nullopt if none exists
// with n squares.  Exhaustive for the budgets used here.
std::optional<Origami> find_11_search(const StratumSpec& s, ComponentLabel c, int n);

// The component the planner prefers when the caller does not care: the
// single component of a connected stratum, else odd where a spin component
// exists, else nonhyperelliptic.  Never hyperelliptic.
ComponentLabel default_component(const StratumSpec& s);

} // namespace stsurf

#endif
