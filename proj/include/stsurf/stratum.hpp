#ifndef STSURF_STRATUM_HPP
#define STSURF_STRATUM_HPP

#include <string>
#include <vector>

namespace stsurf {

// A stratum of Abelian differentials: the multiset of zero orders plus an
// explicit count of marked points (order-0 regular vertices, invisible to the
// flat metric but carried by every square tiling).
struct StratumSpec {
    std::vector<int> zero_orders;  // sorted descending, each >= 1
    int marked_points = 0;

    StratumSpec() = default;
    StratumSpec(std::vector<int> orders, int marked = 0);

    int total_order() const;                 // sum of zero orders = 2g-2
    int genus() const;                       // total/2 + 1
    int num_zeros() const { return static_cast<int>(zero_orders.size()); }
    bool all_even() const;

    bool operator==(const StratumSpec& o) const {
        return zero_orders == o.zero_orders && marked_points == o.marked_points;
    }
    bool same_zeros(const StratumSpec& o) const { return zero_orders == o.zero_orders; }

    // "H(6,2)"; marked points appear as trailing 0 entries, e.g. "H(2,0)".
    std::string to_string() const;
};

enum class ComponentLabel { hyperelliptic, odd, even, nonhyperelliptic, connected };

std::string to_string(ComponentLabel c);
ComponentLabel component_from_string(const std::string& s);

// The Kontsevich-Zorich list of connected components, genus >= 2.  Marked
// points do not affect the component structure.
std::vector<ComponentLabel> components_of(const StratumSpec& s);
bool component_admissible(const StratumSpec& s, ComponentLabel c);

// Minimum squares for any square-tiled surface in the stratum (Euler count).
int min_squares(const StratumSpec& s);
// Minimum squares for a surface with one horizontal and one vertical cylinder
// in the given component: 4g-4 and 4g-2 for the hyperelliptic components of
// H(2g-2) and H(g-1,g-1), the plain minimum otherwise.
int min_squares_11(const StratumSpec& s, ComponentLabel c);

// "6,2" or "4,0,0" (each ",0" entry is a marked point); used by the CLI.
StratumSpec parse_stratum(const std::string& text);

} // namespace stsurf

#endif
