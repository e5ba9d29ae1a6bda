#ifndef STSURF_CENSUS_HPP
#define STSURF_CENSUS_HPP

#include "stsurf/origami.hpp"
#include "stsurf/stratum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stsurf {

struct CensusQuery {
    int n = 1;
    std::optional<std::vector<int>> zero_orders;  // sorted descending
    std::optional<int> marked_points;
    std::optional<ComponentLabel> component;  // needs genus >= 2 surfaces
    std::optional<std::pair<int, int>> cylinders;
    bool one_one = false;  // shorthand for cylinders == (1,1)
    bool hyperelliptic_only = false;
    int jobs = 1;
};

// One conjugacy class of transitive pairs, in canonical form.
struct CensusRecord {
    Permutation h, v;
    StratumSpec stratum;
    std::string component;  // "-" for genus < 2
    int hcyl = 0, vcyl = 0;

    Origami origami() const { return Origami(h, v); }
};

// Exactly one representative per simultaneous-conjugacy class of transitive
// pairs on n squares matching the filters, sorted by canonical form.  h runs
// over one representative per cycle type, v over the full symmetric group;
// dedup via canonical_form.  Deterministic output for any job count.
std::vector<CensusRecord> census_enumerate(const CensusQuery& q);

// Confirms the 1,1 square-count bound of a hyperelliptic component: no
// matching 1,1 origami below min_squares_11 and a witness at the bound.
struct BoundReport {
    StratumSpec stratum;
    int bound = 0;
    std::vector<std::pair<int, long long>> counts_below;  // (n, matching classes)
    bool witness_at_bound = false;
    bool ok() const;
};

BoundReport verify_bound(const StratumSpec& s, int budget, int jobs = 1);

} // namespace stsurf

#endif
