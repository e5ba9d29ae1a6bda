#include "stsurf/catalog.hpp"

#include "stsurf/classify.hpp"
#include "stsurf/combinators.hpp"
#include "stsurf/origami.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsurf {
namespace catalog {
namespace {

// Every emitter funnels through here: classify the surface, check the claim,
// check 1,1 and minimality.  A failure is a bug in the table, never a silent
// emit.
CatalogEntry validated(Representative rep, StratumSpec expect, ComponentLabel comp,
                       std::string name, std::optional<int> bottom_leaving = std::nullopt) {
    Origami o = from_representative(rep);
    Classification got = classify(o);
    if (!(got.stratum == expect) || got.component != comp)
        throw std::logic_error("catalog entry " + name + ": classified as " +
                               got.stratum.to_string() + "/" + to_string(got.component) +
                               ", expected " + expect.to_string() + "/" + to_string(comp));
    if (!is_one_one(o))
        throw std::logic_error("catalog entry " + name + ": not a 1,1 surface");
    if (rep.squares() != min_squares_11(expect, comp))
        throw std::logic_error("catalog entry " + name + ": square count " +
                               std::to_string(rep.squares()) + " != minimal " +
                               std::to_string(min_squares_11(expect, comp)));
    CatalogEntry e;
    e.rep = std::move(rep);
    e.stratum = std::move(expect);
    e.component = comp;
    e.name = std::move(name);
    if (comp == ComponentLabel::odd) e.parity = 1;
    if (comp == ComponentLabel::even) e.parity = 0;
    e.bottom_leaving = bottom_leaving;
    return e;
}

Representative rep_from_bottom(std::vector<int> bottom) {
    const int n = static_cast<int>(bottom.size()) - 1;
    std::vector<int> top(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i;
    return Representative::from_rows(std::move(top), std::move(bottom));
}

// Interval-reversing representative [0..L] over [L..0]; the standard form of
// the hyperelliptic components before marked points are added.
Representative reversing_rep(int L) {
    std::vector<int> bottom(L + 1);
    for (int i = 0; i <= L; ++i) bottom[i] = L - i;
    return rep_from_bottom(std::move(bottom));
}

// Insert one fresh symbol right of each listed side in both rows, then
// relabel so the top row is sorted again.
Representative split_sides(const Representative& base, const std::vector<int>& sides) {
    std::vector<int> t = base.top, b = base.bottom;
    int fresh = base.squares() + 1;
    for (int s : sides) {
        auto ins = [&](std::vector<int>& row) {
            auto it = std::find(row.begin(), row.end(), s);
            row.insert(it + 1, fresh);
        };
        ins(t);
        ins(b);
        ++fresh;
    }
    std::vector<int> relab(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) relab[t[i]] = static_cast<int>(i);
    for (auto& x : t) x = relab[x];
    for (auto& x : b) x = relab[x];
    return Representative::from_rows(std::move(t), std::move(b));
}

} // namespace

CatalogEntry hyperelliptic_rep(int g, HypKind which) {
    if (g < 2) throw std::invalid_argument("hyperelliptic_rep: g must be >= 2");
    std::vector<int> sides;
    Representative base = which == HypKind::single ? reversing_rep(2 * g - 1) : reversing_rep(2 * g);
    int upper = which == HypKind::single ? 2 * g - 2 : 2 * g - 1;
    for (int i = 1; i <= g - 1; ++i) sides.push_back(i);
    for (int i = g + 1; i <= upper; ++i) sides.push_back(i);
    Representative rep = split_sides(base, sides);
    if (which == HypKind::single) {
        StratumSpec s({2 * g - 2}, 2 * g - 3);
        return validated(std::move(rep), std::move(s), ComponentLabel::hyperelliptic,
                         "hyp(" + std::to_string(2 * g - 2) + ")");
    }
    StratumSpec s({g - 1, g - 1}, 2 * g - 2);
    return validated(std::move(rep), std::move(s), ComponentLabel::hyperelliptic,
                     "hyp(" + std::to_string(g - 1) + "," + std::to_string(g - 1) + ")");
}

namespace {

// H^odd(2g-2) base family, g >= 4; the g-indexed bottom row.
std::vector<int> oddmin_bottom(int g) {
    const int n = 2 * g - 1;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 5;
    b[2] = 4;
    b[3] = 7;
    b[4] = 3;
    for (int p = 6; p <= 2 * g - 2; p += 2) b[p] = p;
    for (int p = 5; p <= 2 * g - 5; p += 2) b[p] = p + 4;
    b[2 * g - 3] = 1;
    b[2 * g - 1] = 0;
    return b;
}

// H^even(2g-2) base family, g >= 5.
std::vector<int> evenmin_bottom(int g) {
    const int n = 2 * g - 1;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 7;
    b[2] = 6;
    b[3] = 5;
    b[4] = 3;
    b[6] = 4;
    for (int p = 8; p <= 2 * g - 2; p += 2) b[p] = p;
    for (int p = 5; p <= 2 * g - 5; p += 2) b[p] = p + 4;
    b[2 * g - 3] = 1;
    b[2 * g - 1] = 0;
    return b;
}

} // namespace

CatalogEntry even_zero_base(int two_k, ComponentLabel parity) {
    if (two_k < 4 || two_k % 2 != 0)
        throw std::invalid_argument("even_zero_base: order must be even and >= 4");
    const int g = two_k / 2 + 1;
    if (parity == ComponentLabel::odd) {
        Representative rep = two_k == 4 ? rep_from_bottom({2, 5, 4, 1, 3, 0})
                                        : rep_from_bottom(oddmin_bottom(g));
        return validated(std::move(rep), StratumSpec({two_k}), ComponentLabel::odd,
                         "oddmin(" + std::to_string(two_k) + ")", two_k);
    }
    if (parity != ComponentLabel::even)
        throw std::invalid_argument("even_zero_base: parity must be odd or even");
    if (two_k == 4)
        throw std::invalid_argument("even_zero_base: component does not exist: there is no even "
                                    "component in the stratum H(4)");
    Representative rep = two_k == 6 ? rep_from_bottom({2, 7, 6, 5, 3, 1, 4, 0})
                                    : rep_from_bottom(evenmin_bottom(g));
    return validated(std::move(rep), StratumSpec({two_k}), ComponentLabel::even,
                     "evenmin(" + std::to_string(two_k) + ")", two_k);
}

namespace {

struct ExcRow {
    const char* key;
    std::vector<int> bottom;
    std::vector<int> zeros;
    ComponentLabel comp;
    std::optional<int> bottom_leaving;
};

const std::vector<ExcRow>& exceptional_table() {
    using C = ComponentLabel;
    static const std::vector<ExcRow> table = {
        {"odd(2,2)", {2, 4, 6, 3, 1, 5, 0}, {2, 2}, C::odd, {}},
        {"odd(2,2,2)", {2, 8, 6, 9, 4, 1, 3, 5, 7, 0}, {2, 2, 2}, C::odd, {}},
        {"even(2,2,2)", {2, 9, 8, 7, 6, 3, 5, 1, 4, 0}, {2, 2, 2}, C::even, {}},
        {"even(2,2,2,2)", {2, 5, 4, 1, 12, 3, 10, 7, 11, 9, 6, 8, 0}, {2, 2, 2, 2}, C::even, {}},
        {"odd(4,2)", {2, 5, 8, 3, 6, 4, 1, 7, 0}, {4, 2}, C::odd, {}},
        {"even(4,2)", {2, 4, 1, 8, 7, 5, 3, 6, 0}, {4, 2}, C::even, {}},
        {"even(4,2,2)", {2, 8, 5, 3, 1, 10, 9, 6, 4, 11, 7, 0}, {4, 2, 2}, C::even, {}},
        {"even(6,2)", {2, 10, 9, 8, 6, 3, 5, 1, 4, 7, 0}, {6, 2}, C::even, {}},
        {"even(4,4)", {2, 10, 7, 5, 8, 1, 9, 6, 4, 3, 0}, {4, 4}, C::even, {}},
        {"even(8,2)", {2, 7, 6, 5, 3, 8, 4, 10, 12, 9, 1, 11, 0}, {8, 2}, C::even, {}},
        {"nonhyp(3,3)", {2, 8, 6, 5, 7, 4, 1, 3, 0}, {3, 3}, C::nonhyperelliptic, 3},
        {"H(3,1)", {2, 5, 1, 6, 4, 3, 0}, {3, 1}, C::connected, 3},
        {"H(5,1)", {2, 4, 7, 3, 1, 8, 6, 5, 0}, {5, 1}, C::connected, 5},
        {"H(3,1)bot", {2, 6, 5, 1, 4, 3, 0}, {3, 1}, C::connected, 1},
        {"H(1,1,1,1)", {2, 6, 5, 3, 1, 8, 4, 7, 0}, {1, 1, 1, 1}, C::connected, {}},
        {"H(1,1,1,1,1,1)",
         {2, 8, 1, 5, 11, 7, 3, 10, 6, 12, 9, 4, 0},
         {1, 1, 1, 1, 1, 1},
         C::connected,
         {}},
        {"H(3,1,1,1)", {2, 10, 6, 5, 1, 8, 4, 7, 3, 9, 0}, {3, 1, 1, 1}, C::connected, {}},
        {"H(2,1,1,1,1)", {2, 7, 11, 6, 3, 9, 5, 1, 8, 4, 10, 0}, {2, 1, 1, 1, 1}, C::connected, {}},
        {"H(3,1,2)", {2, 6, 8, 3, 7, 4, 1, 9, 5, 0}, {3, 2, 1}, C::connected, {}},
        {"H(2,2,1,1)", {2, 4, 9, 7, 3, 8, 5, 1, 10, 6, 0}, {2, 2, 1, 1}, C::connected, {}},
        {"H(2,1,1)", {2, 6, 4, 1, 7, 5, 3, 0}, {2, 1, 1}, C::connected, {}},
        {"H(4,1,1)", {2, 7, 4, 1, 9, 5, 8, 6, 3, 0}, {4, 1, 1}, C::connected, {}},
    };
    return table;
}

} // namespace

CatalogEntry exceptional(const std::string& key) {
    for (const auto& row : exceptional_table()) {
        if (key == row.key)
            return validated(rep_from_bottom(row.bottom), StratumSpec(row.zeros), row.comp,
                             std::string("exc:") + row.key, row.bottom_leaving);
    }
    throw std::invalid_argument("exceptional: unknown key " + key);
}

std::vector<std::string> exceptional_keys() {
    std::vector<std::string> out;
    for (const auto& row : exceptional_table()) out.push_back(row.key);
    return out;
}

CatalogEntry family_2odd(int k) {
    if (k < 3) throw std::invalid_argument("family_2odd: k must be >= 3");
    if (k == 3)
        return validated(rep_from_bottom({2, 5, 4, 6, 3, 8, 10, 7, 1, 9, 0}), StratumSpec({6, 2}),
                         ComponentLabel::odd, "2odd(6,2)", 6);
    const int n = 2 * k + 4;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 5;
    b[2] = 4;
    b[3] = 7;
    b[4] = 3;
    for (int p = 5; p <= 2 * k - 5; p += 2) b[p] = p + 4;
    for (int p = 6; p <= 2 * k - 2; p += 2) b[p] = p;
    b[2 * k - 3] = 2 * k;
    b[2 * k - 1] = 2 * k + 2;
    b[2 * k] = 2 * k + 4;
    b[2 * k + 1] = 2 * k + 1;
    b[2 * k + 2] = 1;
    b[2 * k + 3] = 2 * k + 3;
    b[2 * k + 4] = 0;
    return validated(rep_from_bottom(std::move(b)), StratumSpec({2 * k, 2}), ComponentLabel::odd,
                     "2odd(" + std::to_string(2 * k) + ",2)", 2 * k);
}

CatalogEntry family_2even(int k) {
    if (k < 4) throw std::invalid_argument("family_2even: k must be >= 4");
    if (k == 4) {
        CatalogEntry e = exceptional("even(8,2)");
        e.name = "2even(8,2)";
        e.bottom_leaving = 8;
        return e;
    }
    const int n = 2 * k + 4;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 7;
    b[2] = 6;
    b[3] = 5;
    b[4] = 3;
    b[6] = 4;
    for (int p = 5; p <= 2 * k - 5; p += 2) b[p] = p + 4;
    for (int p = 8; p <= 2 * k - 2; p += 2) b[p] = p;
    b[2 * k - 3] = 2 * k;
    b[2 * k - 1] = 2 * k + 2;
    b[2 * k] = 2 * k + 4;
    b[2 * k + 1] = 2 * k + 1;
    b[2 * k + 2] = 1;
    b[2 * k + 3] = 2 * k + 3;
    b[2 * k + 4] = 0;
    return validated(rep_from_bottom(std::move(b)), StratumSpec({2 * k, 2}), ComponentLabel::even,
                     "2even(" + std::to_string(2 * k) + ",2)", 2 * k);
}

CatalogEntry family_2g31(int k) {
    if (k < 3) throw std::invalid_argument("family_2g31: k must be >= 3");
    if (k == 3)
        return validated(rep_from_bottom({2, 5, 4, 9, 3, 8, 6, 1, 10, 7, 0}), StratumSpec({7, 1}),
                         ComponentLabel::connected, "2g31(7,1)", 7);
    const int n = 2 * k + 4;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 5;
    b[2] = 4;
    b[3] = 7;
    b[4] = 3;
    for (int p = 5; p <= 2 * k - 5; p += 2) b[p] = p + 4;
    for (int p = 6; p <= 2 * k - 2; p += 2) b[p] = p;
    b[2 * k - 3] = 2 * k + 3;
    b[2 * k - 1] = 2 * k + 2;
    b[2 * k] = 2 * k;
    b[2 * k + 1] = 1;
    b[2 * k + 2] = 2 * k + 4;
    b[2 * k + 3] = 2 * k + 1;
    b[2 * k + 4] = 0;
    return validated(rep_from_bottom(std::move(b)), StratumSpec({2 * k + 1, 1}),
                     ComponentLabel::connected, "2g31(" + std::to_string(2 * k + 1) + ",1)",
                     2 * k + 1);
}

CatalogEntry family_2g5_4k3(int k) {
    if (k < 1) throw std::invalid_argument("family_2g5_4k3: k must be >= 1");
    const int n = 4 * k + 10;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 4 * k + 10;
    b[2] = 4 * k + 6;
    b[3] = 4 * k + 5;
    b[4] = 1;
    for (int p = 5; p <= 4 * k + 3; p += 2) b[p] = p - 1;
    for (int p = 6; p <= 4 * k + 2; p += 2) b[p] = p - 3;
    const int base = 4 * k + 4;
    const int tail[7] = {4 * k + 1, 4 * k + 8, 4 * k + 4, 4 * k + 7, 4 * k + 3, 4 * k + 9, 0};
    for (int i = 0; i < 7; ++i) b[base + i] = tail[i];
    return validated(rep_from_bottom(std::move(b)), StratumSpec({4 * k + 3, 1, 1, 1}),
                     ComponentLabel::connected,
                     "2g5(" + std::to_string(4 * k + 3) + ",1,1,1)");
}

CatalogEntry family_2g5_4k1(int k) {
    if (k < 2) throw std::invalid_argument("family_2g5_4k1: k must be >= 2");
    const int n = 4 * k + 8;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 4 * k + 8;
    b[2] = 4 * k + 5;
    b[3] = 4 * k + 4;
    b[4] = 1;
    for (int p = 5; p <= 4 * k - 1; p += 2) b[p] = p - 1;
    for (int p = 6; p <= 4 * k; p += 2) b[p] = p - 3;
    const int base = 4 * k + 1;
    const int tail[8] = {4 * k + 3, 4 * k - 1, 4 * k + 2, 4 * k + 6,
                         4 * k + 1, 4 * k,     4 * k + 7, 0};
    for (int i = 0; i < 8; ++i) b[base + i] = tail[i];
    return validated(rep_from_bottom(std::move(b)), StratumSpec({4 * k + 1, 1, 1, 1}),
                     ComponentLabel::connected,
                     "2g5(" + std::to_string(4 * k + 1) + ",1,1,1)");
}

CatalogEntry family_4k2_11(int k) {
    if (k < 1) throw std::invalid_argument("family_4k2_11: k must be >= 1");
    const int n = 4 * k + 7;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 6;
    b[2] = 4;
    b[3] = 1;
    for (int p = 4; p <= 4 * k + 2; p += 2) b[p] = p + 4;
    for (int p = 5; p <= 4 * k + 1; p += 2) b[p] = p + 2;
    const int base = 4 * k + 3;
    const int tail[5] = {4 * k + 5, 4 * k + 7, 5, 3, 0};
    for (int i = 0; i < 5; ++i) b[base + i] = tail[i];
    return validated(rep_from_bottom(std::move(b)), StratumSpec({4 * k + 2, 1, 1}),
                     ComponentLabel::connected, "H(" + std::to_string(4 * k + 2) + ",1,1)");
}

CatalogEntry family_4k_11(int k) {
    if (k < 2) throw std::invalid_argument("family_4k_11: k must be >= 2");
    const int n = 4 * k + 5;
    std::vector<int> b(n + 1, -1);
    b[0] = 2;
    b[1] = 7;
    b[2] = 4;
    b[3] = 1;
    for (int p = 4; p <= 4 * k - 2; p += 2) b[p] = p + 5;
    for (int p = 5; p <= 4 * k - 1; p += 2) b[p] = p + 3;
    const int base = 4 * k;
    const int tail[6] = {4 * k + 5, 5, 4 * k + 4, 6, 3, 0};
    for (int i = 0; i < 6; ++i) b[base + i] = tail[i];
    return validated(rep_from_bottom(std::move(b)), StratumSpec({4 * k, 1, 1}),
                     ComponentLabel::connected, "H(" + std::to_string(4 * k) + ",1,1)");
}

CatalogEntry family_bot(int k) {
    if (k < 1) throw std::invalid_argument("family_bot: k must be >= 1");
    Representative rep = rep_from_bottom({2, 6, 4, 10, 8, 3, 1, 9, 7, 5, 0});
    // raise both zero orders by 2, k-1 times: four squares are inserted at
    // the wrap-around edge each time
    for (int i = 1; i < k; ++i) rep = detail::insert_at_wrap(rep, {2, 1, 4, 3});
    return validated(std::move(rep), StratumSpec({2 * k + 3, 2 * k + 1}),
                     ComponentLabel::connected,
                     "bot(" + std::to_string(2 * k + 3) + "," + std::to_string(2 * k + 1) + ")",
                     2 * k + 1);
}

std::vector<CatalogEntry> all_entries(int max_squares) {
    std::vector<CatalogEntry> out;
    auto add = [&](CatalogEntry e) {
        if (e.rep.squares() <= max_squares) out.push_back(std::move(e));
    };
    for (int g = 2; 4 * g - 4 <= max_squares; ++g) {
        add(hyperelliptic_rep(g, HypKind::single));
        if (4 * g - 2 <= max_squares) add(hyperelliptic_rep(g, HypKind::double_zero));
    }
    for (int two_k = 4; two_k + 1 <= max_squares; two_k += 2) {
        add(even_zero_base(two_k, ComponentLabel::odd));
        if (two_k >= 6) add(even_zero_base(two_k, ComponentLabel::even));
    }
    for (const auto& key : exceptional_keys()) add(exceptional(key));
    for (int k = 3; 2 * k + 4 <= max_squares; ++k) add(family_2odd(k));
    for (int k = 4; 2 * k + 4 <= max_squares; ++k) add(family_2even(k));
    for (int k = 3; 2 * k + 4 <= max_squares; ++k) add(family_2g31(k));
    for (int k = 1; 4 * k + 10 <= max_squares; ++k) add(family_2g5_4k3(k));
    for (int k = 2; 4 * k + 8 <= max_squares; ++k) add(family_2g5_4k1(k));
    for (int k = 1; 4 * k + 7 <= max_squares; ++k) add(family_4k2_11(k));
    for (int k = 2; 4 * k + 5 <= max_squares; ++k) add(family_4k_11(k));
    for (int k = 1; 4 * k + 6 <= max_squares; ++k) add(family_bot(k));
    return out;
}

} // namespace catalog
} // namespace stsurf
