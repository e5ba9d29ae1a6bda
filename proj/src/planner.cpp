#include "stsurf/planner.hpp"

#include "stsurf/classify.hpp"
#include "stsurf/combinators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stsurf {
namespace {

using stsurf::CatalogEntry;

// A building block: a validated surface together with the recipe steps that
// produced it.
struct Block {
    Representative rep;
    std::vector<int> zeros;  // sorted descending
    std::optional<int> parity;
    std::vector<RecipeStep> steps;
};

RecipeStep step_for(const std::string& op, const std::string& detail, const Representative& rep) {
    Classification cl = classify(rep);
    RecipeStep st;
    st.op = op;
    st.detail = detail;
    st.rep_text = rep.to_text();
    st.stratum = cl.stratum;
    st.component = cl.component;
    st.squares = rep.squares();
    return st;
}

Block block_of(const CatalogEntry& e) {
    Block b;
    b.rep = e.rep;
    b.zeros = e.stratum.zero_orders;
    b.parity = e.parity;
    b.steps.push_back(step_for("catalog", e.name, e.rep));
    return b;
}

// ---- block emitters ----------------------------------------------------

Block emit_single(int z, int parity) {
    return block_of(catalog::even_zero_base(z, parity ? ComponentLabel::odd : ComponentLabel::even));
}

Block emit_pair2(int z, int parity) {
    if (z == 4)
        return block_of(catalog::exceptional(parity ? "odd(4,2)" : "even(4,2)"));
    if (z == 6 && !parity) return block_of(catalog::exceptional("even(6,2)"));
    return block_of(parity ? catalog::family_2odd(z / 2) : catalog::family_2even(z / 2));
}

Block emit_even11(int z) {
    if (z == 2) return block_of(catalog::exceptional("H(2,1,1)"));
    if (z == 4) return block_of(catalog::exceptional("H(4,1,1)"));
    if (z % 4 == 2) return block_of(catalog::family_4k2_11((z - 2) / 4));
    return block_of(catalog::family_4k_11(z / 4));
}

Block emit_odd1(int a) {
    if (a == 3) return block_of(catalog::exceptional("H(3,1)"));
    if (a == 5) return block_of(catalog::exceptional("H(5,1)"));
    return block_of(catalog::family_2g31((a - 1) / 2));
}

Block emit_odd111(int a);

// Validate a combinator-produced block against the expected zeros.
Block combined_block(const std::string& op, const std::string& detail, Representative rep,
                     std::vector<int> expect_zeros, std::vector<RecipeStep> source_steps) {
    std::sort(expect_zeros.begin(), expect_zeros.end(), std::greater<int>());
    StratumSpec got = stratum_of(from_representative(rep));
    if (got.zero_orders != expect_zeros || got.marked_points != 0)
        throw std::logic_error("planner block " + op + "(" + detail + "): landed in " +
                               got.to_string() + ", expected zeros " +
                               StratumSpec(expect_zeros).to_string());
    if (!is_one_one(from_representative(rep)))
        throw std::logic_error("planner block " + op + "(" + detail + "): not 1,1");
    Block b;
    b.zeros = std::move(expect_zeros);
    b.steps = std::move(source_steps);
    b.steps.push_back(step_for(op, detail, rep));
    b.rep = std::move(rep);
    return b;
}

// Odd pair {a, b}, a >= b >= 3.  Gap 0: right-swap of H^odd(4j+2), H^odd(4k)
// (the H(3,3) exceptional at the bottom); gap 2: the bot family; gap >= 4:
// left-swap of H^odd(2b), H^odd(a-b).
Block emit_oddpair(int a, int b) {
    if (a == b) {
        if (a == 3) return block_of(catalog::exceptional("nonhyp(3,3)"));
        CatalogEntry s1 = catalog::even_zero_base(6, ComponentLabel::odd);
        CatalogEntry s2 = catalog::even_zero_base(2 * a - 6, ComponentLabel::odd);
        Representative rep = right_swap_concat(s1.rep, s2.rep);
        std::vector<RecipeStep> steps{step_for("catalog", s1.name, s1.rep),
                                      step_for("catalog", s2.name, s2.rep)};
        return combined_block("rswap", s1.name + "+" + s2.name, std::move(rep), {a, b},
                              std::move(steps));
    }
    if (a == b + 2) return block_of(catalog::family_bot((b - 1) / 2));
    CatalogEntry s1 = catalog::even_zero_base(2 * b, ComponentLabel::odd);
    CatalogEntry s2 = catalog::even_zero_base(a - b, ComponentLabel::odd);
    Representative rep = left_swap_concat(s1.rep, s2.rep);
    std::vector<RecipeStep> steps{step_for("catalog", s1.name, s1.rep),
                                  step_for("catalog", s2.name, s2.rep)};
    return combined_block("lswap", s1.name + "+" + s2.name, std::move(rep), {a, b},
                          std::move(steps));
}

// Gap-2 pair {b+2, b} with the larger zero leaving on the bottom: right-swap
// of H^odd(4), H^odd(4(m-1)) with m = (b+1)/2; the gadget source for
// {b+4, b, 2}.
Block emit_rs_pair_topbot(int b) {
    int m = (b + 1) / 2;
    CatalogEntry s1 = catalog::even_zero_base(4, ComponentLabel::odd);
    CatalogEntry s2 = catalog::even_zero_base(4 * (m - 1), ComponentLabel::odd);
    Representative rep = right_swap_concat(s1.rep, s2.rep);
    std::vector<RecipeStep> steps{step_for("catalog", s1.name, s1.rep),
                                  step_for("catalog", s2.name, s2.rep)};
    return combined_block("rswap", s1.name + "+" + s2.name, std::move(rep), {b + 2, b},
                          std::move(steps));
}

// {a, b, 2} with a >= b odd: order-2 gadget on a pair whose bottom-leaving
// zero has order a-2.
Block emit_oddpair2(int a, int b) {
    if (a == 3 && b == 1) return block_of(catalog::exceptional("H(3,1,2)"));
    Block source;
    if (b == 1)
        source = a == 5 ? block_of(catalog::exceptional("H(3,1)"))
                        : emit_odd1(a - 2);
    else if (a == 3 && b == 3)
        source = block_of(catalog::exceptional("H(3,1)bot"));
    else if (a == b)
        source = block_of(catalog::family_bot((a - 3) / 2));
    else if (a == b + 2)
        source = emit_oddpair(b, b);
    else if (a == b + 4)
        source = emit_rs_pair_topbot(b);
    else
        source = emit_oddpair(a - 2, b);
    int leaving = bottom_leaving_zero(source.rep);
    if (leaving != a - 2)
        throw std::logic_error(
            "planner: gadget source for {" + std::to_string(a) + "," + std::to_string(b) +
            ",2} has bottom-leaving zero " + std::to_string(leaving) + ", expected " +
            std::to_string(a - 2));
    Representative rep = order2_gadget(source.rep);
    return combined_block("gadget2", "raise " + std::to_string(a - 2), std::move(rep),
                          {a, b, 2}, std::move(source.steps));
}

Block emit_odd111(int a) {
    if (a == 3) return block_of(catalog::exceptional("H(3,1,1,1)"));
    if (a == 5) {
        Block source = block_of(catalog::exceptional("H(3,1)"));
        Representative rep = h11_gadget(source.rep);
        return combined_block("h11", "H(3,1)", std::move(rep), {5, 1, 1, 1},
                              std::move(source.steps));
    }
    if (a % 4 == 3) return block_of(catalog::family_2g5_4k3((a - 3) / 4));
    return block_of(catalog::family_2g5_4k1((a - 1) / 4));
}

// ---- partition search ----------------------------------------------------

// A shape consumed from the zero multiset plus how to emit it.  parities:
// empty = not applicable, else the available spin parities.
struct Take {
    std::vector<int> zeros;   // consumed, sorted descending
    std::vector<int> parities;
    std::function<Block(int parity)> emit;
};

// All ways to consume the largest remaining zero, in deterministic priority
// order.
std::vector<Take> takes_for(const std::vector<int>& rest) {
    std::vector<Take> out;
    const int z = rest[0];
    auto count = [&](int x) { return static_cast<int>(std::count(rest.begin(), rest.end(), x)); };

    if (z >= 4 && z % 2 == 0) {
        if (count(2) >= 1)
            out.push_back({{z, 2}, {1, 0}, [z](int p) { return emit_pair2(z, p); }});
        if (z >= 6)
            out.push_back({{z}, {1, 0}, [z](int p) { return emit_single(z, p); }});
        else
            out.push_back({{z}, {1}, [z](int p) { return emit_single(z, p); }});
        if (count(1) >= 2) out.push_back({{z, 1, 1}, {}, [z](int) { return emit_even11(z); }});
        if (z == 4 && count(4) >= 2)
            out.push_back({{4, 4}, {0}, [](int) { return block_of(catalog::exceptional("even(4,4)")); }});
        if (z == 4 && count(2) >= 2)
            out.push_back(
                {{4, 2, 2}, {0}, [](int) { return block_of(catalog::exceptional("even(4,2,2)")); }});
    } else if (z == 2) {
        if (count(2) >= 3)
            out.push_back({{2, 2, 2}, {1, 0}, [](int p) {
                               return block_of(catalog::exceptional(p ? "odd(2,2,2)" : "even(2,2,2)"));
                           }});
        if (count(2) >= 2)
            out.push_back({{2, 2}, {1}, [](int) { return block_of(catalog::exceptional("odd(2,2)")); }});
        if (count(2) >= 4)
            out.push_back(
                {{2, 2, 2, 2}, {0}, [](int) { return block_of(catalog::exceptional("even(2,2,2,2)")); }});
        if (count(1) >= 2)
            out.push_back({{2, 1, 1}, {}, [](int) { return emit_even11(2); }});
        if (count(2) >= 2 && count(1) >= 2)
            out.push_back(
                {{2, 2, 1, 1}, {}, [](int) { return block_of(catalog::exceptional("H(2,2,1,1)")); }});
        if (count(1) >= 4)
            out.push_back({{2, 1, 1, 1, 1},
                           {},
                           [](int) { return block_of(catalog::exceptional("H(2,1,1,1,1)")); }});
    } else if (z >= 3) {
        // odd; partners in descending order
        std::vector<int> partners;
        for (std::size_t i = 1; i < rest.size(); ++i)
            if (rest[i] % 2 == 1 && (partners.empty() || partners.back() != rest[i]))
                partners.push_back(rest[i]);
        for (int b : partners) {
            if (b >= 3)
                out.push_back({{z, b}, {}, [z, b](int) { return emit_oddpair(z, b); }});
            else
                out.push_back({{z, 1}, {}, [z](int) { return emit_odd1(z); }});
        }
        if (count(1) >= 3) out.push_back({{z, 1, 1, 1}, {}, [z](int) { return emit_odd111(z); }});
        if (count(2) >= 1) {
            for (int b : partners)
                out.push_back({{z, b, 2}, {}, [z, b](int) { return emit_oddpair2(z, b); }});
        }
    } else {
        // z == 1: only order-1 zeros remain
        if (count(1) >= 4)
            out.push_back(
                {{1, 1, 1, 1}, {}, [](int) { return block_of(catalog::exceptional("H(1,1,1,1)")); }});
        if (count(1) >= 6)
            out.push_back({{1, 1, 1, 1, 1, 1}, {}, [](int) {
                               return block_of(catalog::exceptional("H(1,1,1,1,1,1)"));
                           }});
    }
    return out;
}

bool remove_multiset(std::vector<int>& rest, const std::vector<int>& zeros) {
    for (int z : zeros) {
        auto it = std::find(rest.begin(), rest.end(), z);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    return true;
}

// Enumerate partitions of the zero multiset into emitter shapes,
// depth-first in priority order; on each complete partition try the parity
// assignment.  Returns the chosen takes and parities.
struct Partition {
    std::vector<Take> takes;
    std::vector<int> parities;  // -1 where not applicable
};

bool partition_search(std::vector<int> rest, std::optional<int> target_parity,
                      std::vector<Take>& chosen, Partition& out) {
    if (rest.empty()) {
        // parity assignment: all free blocks odd, flip the first free one if
        // the total comes out wrong
        std::vector<int> parities(chosen.size(), -1);
        if (target_parity) {
            int fixed_sum = 0, blocks = static_cast<int>(chosen.size());
            std::vector<int> free_idx;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                const auto& P = chosen[i].parities;
                if (P.empty())
                    throw std::logic_error("planner: parity target over a non-spin block");
                if (P.size() == 1) {
                    parities[i] = P[0];
                    fixed_sum += P[0];
                } else {
                    parities[i] = 1;
                    free_idx.push_back(static_cast<int>(i));
                }
            }
            int total = (fixed_sum + static_cast<int>(free_idx.size()) + blocks - 1) % 2;
            if (total != *target_parity) {
                if (free_idx.empty()) return false;
                parities[free_idx[0]] = 0;
            }
        }
        out.takes = chosen;
        out.parities = std::move(parities);
        return true;
    }
    for (auto& take : takes_for(rest)) {
        std::vector<int> next = rest;
        if (!remove_multiset(next, take.zeros)) continue;
        chosen.push_back(take);
        if (partition_search(std::move(next), target_parity, chosen, out)) return true;
        chosen.pop_back();
    }
    return false;
}

ConstructResult finish(Representative rep, Recipe recipe, const StratumSpec& request,
                       ComponentLabel c) {
    Classification got = classify(rep);
    int want_squares = min_squares_11(request, c);
    bool stratum_ok = got.stratum.zero_orders == request.zero_orders;
    bool marked_ok = got.stratum.marked_points ==
                     want_squares - (2 * request.genus() + request.num_zeros() - 2);
    if (!stratum_ok || !marked_ok || got.component != c ||
        rep.squares() != want_squares || !is_one_one(from_representative(rep)))
        throw std::logic_error("construct: assembled surface classifies as " +
                               got.stratum.to_string() + "/" + to_string(got.component) + " with " +
                               std::to_string(rep.squares()) + " squares; request " +
                               request.to_string() + "/" + to_string(c) +
                               " needs " + std::to_string(want_squares));
    return {std::move(rep), std::move(recipe)};
}

} // namespace

ComponentLabel default_component(const StratumSpec& s) {
    auto comps = components_of(s);
    if (comps.size() == 1) return comps[0];
    if (std::find(comps.begin(), comps.end(), ComponentLabel::odd) != comps.end())
        return ComponentLabel::odd;
    return ComponentLabel::nonhyperelliptic;
}

ConstructResult construct(const StratumSpec& s, ComponentLabel c) {
    if (s.genus() < 2)
        throw std::invalid_argument("construct: genus must be >= 2");
    if (!component_admissible(s, c))
        throw std::invalid_argument("construct: component does not exist: " + s.to_string() +
                                    " has no " + to_string(c) + " component");
    Recipe recipe;

    if (c == ComponentLabel::hyperelliptic) {
        const int g = s.genus();
        CatalogEntry e = catalog::hyperelliptic_rep(
            g, s.num_zeros() == 1 ? catalog::HypKind::single : catalog::HypKind::double_zero);
        recipe.steps.push_back(step_for("catalog", e.name, e.rep));
        Representative rep = e.rep;
        int forced = e.stratum.marked_points;
        for (int i = forced; i < s.marked_points; ++i) {
            rep = add_marked_point(rep, 3);
            recipe.steps.push_back(step_for("mark", "split symbol 3", rep));
        }
        return finish(std::move(rep), std::move(recipe), s, c);
    }

    std::optional<int> target_parity;
    if (c == ComponentLabel::odd) target_parity = 1;
    if (c == ComponentLabel::even) target_parity = 0;
    if (target_parity && !s.all_even())
        throw std::invalid_argument("construct: spin components need all zero orders even");

    Partition part;
    std::vector<Take> chosen;
    if (!partition_search(s.zero_orders, target_parity, chosen, part))
        throw std::logic_error("construct: no block partition found for " + s.to_string() +
                               " -- planner table gap");

    std::vector<Block> blocks;
    for (std::size_t i = 0; i < part.takes.size(); ++i)
        blocks.push_back(part.takes[i].emit(part.parities[i]));
    // deterministic concatenation order: descending zero multiset, ties by
    // parity (odd first)
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
        if (x.zeros != y.zeros) return x.zeros > y.zeros;
        return x.parity.value_or(-1) > y.parity.value_or(-1);
    });

    for (auto& b : blocks)
        for (auto& st : b.steps) recipe.steps.push_back(st);

    Representative rep = blocks[0].rep;
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        rep = concat(rep, blocks[i].rep);
        recipe.steps.push_back(step_for("concat", "with block " + std::to_string(i + 1), rep));
    }
    for (int i = 0; i < s.marked_points; ++i) {
        rep = concat(rep, Representative::torus());
        recipe.steps.push_back(step_for("mark", "torus concatenation", rep));
    }
    return finish(std::move(rep), std::move(recipe), s, c);
}

void replay(const Recipe& r) {
    for (const auto& st : r.steps) {
        Representative rep = Representative::parse(st.rep_text);
        Classification cl = classify(rep);
        if (!(cl.stratum == st.stratum) || cl.component != st.component ||
            rep.squares() != st.squares)
            throw std::logic_error("replay: step '" + st.op + " " + st.detail +
                                   "' classifies as " + cl.stratum.to_string() + "/" +
                                   to_string(cl.component) + ", recorded " +
                                   st.stratum.to_string() + "/" + to_string(st.component));
    }
}

namespace {

// Partial-commutator pruning state for find_11_search.  The commutator value
// c(x) = h(v(h^-1(v^-1(x)))) becomes known once the chain is assigned;
// completed cycles must consume an available cycle length, open chains must
// still fit.
struct SearchState {
    int n;
    std::vector<int> target;  // cycle lengths (k+1 per zero), descending
    int marked_budget;        // allowed fixed points

    std::vector<int> v, vinv;

    bool feasible() const {
        std::vector<int> cnext(n, -1);
        for (int x = 0; x < n; ++x) {
            int a = vinv[x];
            if (a < 0) continue;
            int b = a == 0 ? n - 1 : a - 1;  // h^-1
            int c = v[b];
            if (c < 0) continue;
            cnext[x] = (c + 1) % n;  // h
        }
        std::vector<int> cprev(n, -1);
        for (int x = 0; x < n; ++x)
            if (cnext[x] >= 0) cprev[cnext[x]] = x;

        std::vector<int> avail = target;
        int marked_used = 0;
        std::vector<char> seen(n, 0);
        std::vector<int> open_lengths;
        for (int x = 0; x < n; ++x) {
            if (seen[x] || (cnext[x] < 0 && cprev[x] < 0)) continue;
            // walk to the start of the chain (or detect a cycle)
            int start = x;
            bool cycle = false;
            int guard = 0;
            while (cprev[start] >= 0) {
                start = cprev[start];
                if (start == x) { cycle = true; break; }
                if (++guard > n) throw std::logic_error("commutator chain walk diverged");
            }
            int len = 0;
            int y = start;
            while (y >= 0 && !seen[y]) {
                seen[y] = 1;
                ++len;
                y = cnext[y];
            }
            if (cycle) {
                if (len == 1) {
                    if (++marked_used > marked_budget) return false;
                } else {
                    auto it = std::find(avail.begin(), avail.end(), len);
                    if (it == avail.end()) return false;
                    avail.erase(it);
                }
            } else {
                open_lengths.push_back(len);
            }
        }
        // Open chains live on vertices of still-unaccounted nontrivial
        // cycles: their vertices cannot become fixed points, the largest
        // chain needs some remaining cycle at least as long, and chains
        // cannot hold more vertices than the remaining cycles do.
        if (open_lengths.empty()) return true;
        std::sort(open_lengths.begin(), open_lengths.end(), std::greater<int>());
        int chain_vertices = std::accumulate(open_lengths.begin(), open_lengths.end(), 0);
        int avail_total = std::accumulate(avail.begin(), avail.end(), 0);
        if (avail.empty() || chain_vertices > avail_total) return false;
        if (open_lengths[0] > avail[0]) return false;
        return true;
    }
};

} // namespace

std::optional<Origami> find_11_search(const StratumSpec& s, ComponentLabel c, int n) {
    if (n < min_squares(s))
        throw std::invalid_argument("find_11_search: budget below the Euler minimum");
    SearchState st;
    st.n = n;
    for (int k : s.zero_orders) st.target.push_back(k + 1);
    std::sort(st.target.begin(), st.target.end(), std::greater<int>());
    int support = std::accumulate(st.target.begin(), st.target.end(), 0);
    if (support > n) return std::nullopt;
    st.marked_budget = n - support;
    st.v.assign(n, -1);
    st.vinv.assign(n, -1);

    Permutation h = Permutation::full_cycle(n);
    std::optional<Origami> found;

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) {
            Origami o(h, Permutation(st.v));
            StratumSpec got = stratum_of(o);
            if (got.zero_orders != s.zero_orders) return false;
            if (!is_one_one(o)) return false;
            if (classify(o).component != c) return false;
            found = o;
            return true;
        }
        for (int img = 0; img < n; ++img) {
            if (st.vinv[img] >= 0) continue;
            st.v[i] = img;
            st.vinv[img] = i;
            if (st.feasible() && rec(i + 1)) return true;
            st.v[i] = -1;
            st.vinv[img] = -1;
        }
        return false;
    };
    rec(0);
    return found;
}

} // namespace stsurf
