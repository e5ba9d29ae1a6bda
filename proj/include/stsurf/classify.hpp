#ifndef STSURF_CLASSIFY_HPP
#define STSURF_CLASSIFY_HPP

#include "stsurf/origami.hpp"
#include "stsurf/spin.hpp"
#include "stsurf/stratum.hpp"

#include <utility>

namespace stsurf {

struct Classification {
    StratumSpec stratum;
    ComponentLabel component;
};

// Stratum from the commutator plus the Kontsevich-Zorich component: the label
// "connected" when the stratum is connected, else the hyperelliptic test
// where admissible, else spin parity for all-even strata, else
// nonhyperelliptic.  Genus >= 2.
Classification classify(const Origami& o);
Classification classify(const Representative& rep);

} // namespace stsurf

#endif
