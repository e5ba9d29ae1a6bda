#include "stsurf/origami.hpp"

#include "stsurf/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace stsurf {

Origami::Origami(Permutation h_, Permutation v_) : h(std::move(h_)), v(std::move(v_)) {
    if (h.degree() != v.degree())
        throw std::invalid_argument("origami: h and v must have the same degree");
    if (!is_transitive_pair(h, v))
        throw std::invalid_argument("origami: (h,v) does not act transitively (disconnected surface)");
}

Permutation Origami::corner_permutation() const {
    return v.inverse().compose(h.inverse()).compose(v).compose(h);
}

Origami Origami::canonical() const {
    auto [ch, cv] = canonical_form(h, v);
    return Origami(std::move(ch), std::move(cv));
}

StratumSpec stratum_of(const Origami& o) {
    std::vector<int> orders;
    int marked = 0;
    for (const auto& c : commutator(o.h, o.v).cycles()) {
        if (c.size() == 1)
            ++marked;
        else
            orders.push_back(static_cast<int>(c.size()) - 1);
    }
    return StratumSpec(std::move(orders), marked);
}

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction d) {
    const int n = o.n();
    const Permutation& along = d == Direction::horizontal ? o.h : o.v;
    const Permutation& across = d == Direction::horizontal ? o.v : o.h;
    const Permutation corner = o.corner_permutation();

    auto rows = along.cycles();
    std::vector<int> row_of(n);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int x : rows[r]) row_of[x] = r;

    // A row merges with the row above (through `across`) iff no grid vertex
    // on the shared boundary is singular, i.e. the corner permutation fixes
    // every square of the row.
    std::vector<int> parent(rows.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool smooth = std::all_of(rows[r].begin(), rows[r].end(),
                                  [&](int x) { return corner(x) == x; });
        if (smooth) {
            int a = find(static_cast<int>(r));
            int b = find(row_of[across(rows[r][0])]);
            parent[a] = b;
        }
    }

    std::vector<std::vector<int>> classes(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) classes[find(static_cast<int>(r))].push_back(static_cast<int>(r));

    CylinderDecomposition out;
    out.direction = d;
    for (const auto& cls : classes) {
        if (cls.empty()) continue;
        Cylinder cyl;
        cyl.height = static_cast<int>(cls.size());
        cyl.circumference = static_cast<int>(rows[cls[0]].size());
        for (int r : cls) cyl.rows.push_back(rows[r]);
        out.cylinders.push_back(std::move(cyl));
    }
    // deterministic order: by least square label
    std::sort(out.cylinders.begin(), out.cylinders.end(), [](const Cylinder& a, const Cylinder& b) {
        return *std::min_element(a.rows[0].begin(), a.rows[0].end()) <
               *std::min_element(b.rows[0].begin(), b.rows[0].end());
    });
    return out;
}

bool is_one_one(const Origami& o) {
    return cylinder_decomposition(o, Direction::horizontal).cylinders.size() == 1 &&
           cylinder_decomposition(o, Direction::vertical).cylinders.size() == 1;
}

namespace {

// Darts: 4 per square, directions E=0, N=1, W=2, S=3 in counterclockwise
// rotation order.
constexpr int E = 0, N = 1, W = 2, S = 3;

} // namespace

std::vector<int> ribbon_boundaries(const Origami& o) {
    const int n = o.n();
    auto dart = [n](int sq, int dir) { return sq * 4 + dir; };
    // reverse of each dart: E at i pairs with W at h(i), N at i with S at v(i)
    std::vector<int> rev(4 * n);
    for (int i = 0; i < n; ++i) {
        rev[dart(i, E)] = dart(o.h(i), W);
        rev[dart(i, W)] = dart(o.h.inverse()(i), E);
        rev[dart(i, N)] = dart(o.v(i), S);
        rev[dart(i, S)] = dart(o.v.inverse()(i), N);
    }
    // face tracing: next dart = rotation successor of the reversed dart
    std::vector<char> used(4 * n, 0);
    std::vector<int> sides;
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (used[d0]) continue;
        int count = 0;
        int d = d0;
        do {
            used[d] = 1;
            ++count;
            int r = rev[d];
            d = (r / 4) * 4 + (r % 4 + 1) % 4;
        } while (d != d0);
        sides.push_back(count);
    }
    std::sort(sides.begin(), sides.end(), std::greater<int>());
    return sides;
}

namespace {

// All square permutations realizing an affine -I automorphism: determined by
// the image of square 0 once the relations sigma(h(x)) = h^-1(sigma(x)) and
// sigma(v(x)) = v^-1(sigma(x)) are propagated over the transitive action.
std::vector<Permutation> minus_one_candidates(const Origami& o) {
    const int n = o.n();
    const Permutation hi = o.h.inverse(), vi = o.v.inverse();
    std::vector<Permutation> out;
    for (int t = 0; t < n; ++t) {
        std::vector<int> sigma(n, -1);
        sigma[0] = t;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int x = stack.back();
            stack.pop_back();
            const int sx = sigma[x];
            const std::pair<int, int> steps[4] = {
                {o.h(x), hi(sx)}, {o.v(x), vi(sx)}, {hi(x), o.h(sx)}, {vi(x), o.v(sx)}};
            for (auto [y, sy] : steps) {
                if (sigma[y] < 0) {
                    sigma[y] = sy;
                    stack.push_back(y);
                } else if (sigma[y] != sy) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> seen(n, 0);
        bool bij = true;
        for (int x : sigma) {
            if (x < 0 || seen[x]) { bij = false; break; }
            seen[x] = 1;
        }
        if (bij) out.emplace_back(sigma);
    }
    return out;
}

int fixed_point_count(const Origami& o, const Permutation& sigma) {
    const int n = o.n();
    int fixed = 0;
    for (int i = 0; i < n; ++i) {
        if (sigma(i) == i) ++fixed;           // square center
        if (sigma(i) == o.h(i)) ++fixed;      // vertical edge midpoint (right edge of i)
        if (sigma(i) == o.v(i)) ++fixed;      // horizontal edge midpoint (top edge of i)
    }
    // Grid vertices: the top-right corner of square i maps to the top-right
    // corner of h^-1(v^-1(sigma(i))); a vertex (corner cycle) is fixed iff it
    // is mapped into itself.
    const Permutation corner = o.corner_permutation();
    const Permutation hi = o.h.inverse(), vi = o.v.inverse();
    for (const auto& cyc : corner.cycles()) {
        int img = hi(vi(sigma(cyc[0])));
        if (std::find(cyc.begin(), cyc.end(), img) != cyc.end()) ++fixed;
    }
    return fixed;
}

} // namespace

bool is_hyperelliptic(const Origami& o) {
    const StratumSpec s = stratum_of(o);
    const int g = s.genus();
    if (g < 2) throw std::invalid_argument("is_hyperelliptic: genus must be >= 2");
    for (const auto& sigma : minus_one_candidates(o)) {
        if (!sigma.compose(sigma).is_identity()) continue;
        if (fixed_point_count(o, sigma) == 2 * g + 2) return true;
    }
    return false;
}

Origami from_representative(const Representative& rep) {
    const int n = rep.squares();
    auto m = rep.dezeroed_map();
    // zero-indexed: square k corresponds to symbol k+1
    std::vector<int> m0(n);
    for (int s = 1; s <= n; ++s) m0[s - 1] = m[s] - 1;
    Permutation mperm(std::move(m0));
    return Origami(Permutation::full_cycle(n), mperm.inverse());
}

Representative to_representative(const Origami& o) {
    if (!o.h.is_single_cycle())
        throw std::invalid_argument(
            "to_representative: h must be a single cycle (one horizontal cylinder of height 1)");
    const int n = o.n();
    // relabel along the h-cycle so that h becomes 0 -> 1 -> ... -> n-1
    std::vector<int> L(n);
    int x = 0;
    for (int i = 0; i < n; ++i) {
        L[x] = i;
        x = o.h(x);
    }
    const Permutation m = o.v.inverse();
    std::vector<int> mm(n + 1, 0);
    for (int sq = 0; sq < n; ++sq) mm[L[sq] + 1] = L[m(sq)] + 1;
    return Representative::from_map(mm).canonical_rotation();
}

} // namespace stsurf
