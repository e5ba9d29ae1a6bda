#include "stsurf/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsurf {

Classification classify(const Origami& o) {
    StratumSpec s = stratum_of(o);
    if (s.genus() < 2)
        throw std::invalid_argument("classify: genus must be >= 2 (got " + s.to_string() + ")");
    auto comps = components_of(s);
    if (comps.size() == 1) return {s, comps[0]};

    const bool has_hyp =
        std::find(comps.begin(), comps.end(), ComponentLabel::hyperelliptic) != comps.end();
    if (has_hyp) {
        // A 1,1-surface of H(g-1,g-1) built from fewer than 4g-2 squares
        // cannot be hyperelliptic; skip the involution search in that case.
        bool shortcut_nonhyp = s.num_zeros() == 2 && !s.all_even() &&
                               o.n() < 4 * s.genus() - 2 && is_one_one(o);
        if (!shortcut_nonhyp && is_hyperelliptic(o)) return {s, ComponentLabel::hyperelliptic};
    }
    if (s.all_even()) {
        ComponentLabel c = spin_parity(o) == 1 ? ComponentLabel::odd : ComponentLabel::even;
        if (std::find(comps.begin(), comps.end(), c) == comps.end())
            throw std::logic_error("classify: spin label " + to_string(c) +
                                   " inadmissible in " + s.to_string() +
                                   " -- classification bug");
        return {s, c};
    }
    // remaining case: H(2l-1,2l-1) split into hyperelliptic/nonhyperelliptic
    return {s, ComponentLabel::nonhyperelliptic};
}

Classification classify(const Representative& rep) { return classify(from_representative(rep)); }

} // namespace stsurf
