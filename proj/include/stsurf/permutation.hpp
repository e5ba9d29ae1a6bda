#ifndef STSURF_PERMUTATION_HPP
#define STSURF_PERMUTATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stsurf {

// A bijection of {0..n-1}, stored as its image sequence.  All internal labels
// are zero-indexed; one-indexed labels appear only in the cycle-notation text
// format and the two-row representative format.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // The n-cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation full_cycle(int n);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    // this after q: result(i) = (*this)(q(i)).
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;
    bool is_identity() const;

    // Cycles partition {0..n-1}; each cycle starts at its least element and
    // cycles are listed by increasing least element.  Fixed points included.
    std::vector<std::vector<int>> cycles() const;
    // Sorted ascending multiset of cycle lengths.
    std::vector<int> cycle_type() const;
    bool is_single_cycle() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// h v h^-1 v^-1
Permutation commutator(const Permutation& h, const Permutation& v);
// s p s^-1
Permutation conjugate(const Permutation& p, const Permutation& s);

// Does the group generated by h and v act transitively on {0..n-1}?
bool is_transitive_pair(const Permutation& h, const Permutation& v);

// Cycle-notation text, one-indexed, e.g. "(1,3)(2)".  The printer always
// writes fixed points; the parser accepts input with fixed points elided
// provided the degree is passed explicitly.
std::string format_cycles(const Permutation& p);
Permutation parse_cycles(std::string_view text, std::optional<int> degree = std::nullopt);

} // namespace stsurf

#endif
