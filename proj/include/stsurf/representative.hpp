#ifndef STSURF_REPRESENTATIVE_HPP
#define STSURF_REPRESENTATIVE_HPP

#include <string>
#include <vector>

namespace stsurf {

// The two-row symbol array encoding a square-tiled surface with a single
// horizontal cylinder of height one.  Canonical labeling throughout: the top
// row is 0,1,...,N in order and the bottom row is a permutation of it ending
// in 0 (so the first top symbol equals the last bottom symbol).
//
// Removing the 0s gives the positional map m sending the i-th top symbol to
// the i-th bottom symbol; the surface is (h, v) with h the N-cycle and
// v = m^{-1}.
struct Representative {
    std::vector<int> top;
    std::vector<int> bottom;

    static Representative from_rows(std::vector<int> top, std::vector<int> bottom);
    // Build from the de-zeroed positional map: m[s] for symbols s = 1..N
    // (index 0 unused).
    static Representative from_map(const std::vector<int>& m);
    static Representative torus();  // top [0,1], bottom [1,0]

    int squares() const { return static_cast<int>(top.size()) - 1; }
    // m[s] for s = 1..N; m[0] = 0.
    std::vector<int> dezeroed_map() const;

    // Top row begins 0,1,2 and bottom row begins 2 -- the shape cylinder
    // concatenation needs.  The one-square torus is accepted as a degenerate
    // normal form (the paper concatenates with it to add marked points).
    bool is_normal_form() const;

    // Insert a fresh symbol immediately right of `symbol` in both rows and
    // relabel canonically; adds one square and one marked point.
    Representative split_symbol(int symbol) const;

    // Lexicographically minimal bottom row over the N cyclic rotations of the
    // square labels (the relabeling freedom of a one-cylinder surface).
    Representative canonical_rotation() const;

    bool operator==(const Representative& o) const {
        return top == o.top && bottom == o.bottom;
    }

    // Two whitespace-separated integer lines.
    std::string to_text() const;
    static Representative parse(const std::string& text);
};

} // namespace stsurf

#endif
