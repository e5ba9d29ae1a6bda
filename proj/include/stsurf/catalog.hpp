#ifndef STSURF_CATALOG_HPP
#define STSURF_CATALOG_HPP

#include "stsurf/representative.hpp"
#include "stsurf/stratum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stsurf {

// One validated catalog surface: every emitter re-checks its output against
// the claimed stratum, component, cylinder structure and square count before
// returning; a mismatch throws rather than silently emitting.
struct CatalogEntry {
    Representative rep;
    StratumSpec stratum;
    ComponentLabel component;
    std::string name;
    // spin parity when all zero orders are even
    std::optional<int> parity;
    // order of the zero whose boundary leaves the diagram on the bottom,
    // where recorded
    std::optional<int> bottom_leaving;
};

namespace catalog {

// Hyperelliptic families: 4g-4 squares in H^hyp(2g-2), 4g-2 in
// H^hyp(g-1,g-1); built by splitting marked points into the standard
// interval-reversing representatives.  g >= 2.
enum class HypKind { single, double_zero };
CatalogEntry hyperelliptic_rep(int g, HypKind which);

// Base surfaces with one even zero: 2k+1 squares in H^odd(2k) (2k >= 4) or
// H^even(2k) (2k >= 6).
CatalogEntry even_zero_base(int two_k, ComponentLabel parity);

// The fixed table of exceptional surfaces, keyed by name
// (e.g. "even(4,4)", "odd(2,2)", "H(3,1)", "H(3,1)bot", "H(1,1,1,1)").
CatalogEntry exceptional(const std::string& key);
std::vector<std::string> exceptional_keys();

// Parametrized families.
CatalogEntry family_2odd(int k);       // H^odd(2k,2), k >= 3
CatalogEntry family_2even(int k);      // H^even(2k,2), k >= 4
CatalogEntry family_2g31(int k);       // H(2k+1,1), k >= 3
CatalogEntry family_2g5_4k3(int k);    // H(4k+3,1,1,1), k >= 1
CatalogEntry family_2g5_4k1(int k);    // H(4k+1,1,1,1), k >= 2
CatalogEntry family_4k2_11(int k);     // H(4k+2,1,1), k >= 1
CatalogEntry family_4k_11(int k);      // H(4k,1,1), k >= 2
CatalogEntry family_bot(int k);        // H(2k+3,2k+1) with the order-(2k+1)
                                       // zero leaving on the bottom, k >= 1

// Everything above with squares <= max_squares, for regression sweeps.
std::vector<CatalogEntry> all_entries(int max_squares);

} // namespace catalog
} // namespace stsurf

#endif
