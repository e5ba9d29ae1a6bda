#include "stsurf/spin.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace stsurf {
namespace {

constexpr int E = 0, N = 1, W = 2, S = 3;

int step(const Origami& o, int sq, int move) {
    switch (move) {
        case E: return o.h(sq);
        case N: return o.v(sq);
        case W: return o.h.inverse()(sq);
        case S: return o.v.inverse()(sq);
    }
    throw std::invalid_argument("walk: bad move");
}

// turn from direction d1 to d2: +1 left, -1 right, 0 straight; +-2 would be a
// backtrack, which reduced walks exclude
int turn(int d1, int d2) {
    int t = ((d2 - d1) % 4 + 4) % 4;
    if (t == 0) return 0;
    if (t == 1) return 1;
    if (t == 3) return -1;
    throw std::logic_error("walk: backtrack survived reduction");
}

} // namespace

CycleWithIndex CycleWithIndex::trace(const Origami& o, int start, std::vector<int> moves) {
    if (moves.empty()) throw std::invalid_argument("walk: empty move list");
    // verify closure
    int sq = start;
    for (int m : moves) sq = step(o, sq, m);
    if (sq != start) throw std::invalid_argument("walk: does not close up on the surface");

    // reduce backtracks, cyclically; track the current square at each step so
    // the start can move with the reduction
    std::vector<int> sqs;  // square before each move
    sqs.reserve(moves.size());
    sq = start;
    for (int m : moves) {
        sqs.push_back(sq);
        sq = step(o, sq, m);
    }
    bool changed = true;
    while (changed && !moves.empty()) {
        changed = false;
        for (std::size_t i = 0; i + 1 < moves.size(); ++i) {
            if ((moves[i] + 2) % 4 == moves[i + 1]) {
                moves.erase(moves.begin() + i, moves.begin() + i + 2);
                sqs.erase(sqs.begin() + i, sqs.begin() + i + 2);
                changed = true;
                break;
            }
        }
        if (!changed && moves.size() >= 2 && (moves.back() + 2) % 4 == moves.front()) {
            // cyclic backtrack: drop last and first
            moves.erase(moves.begin());
            sqs.erase(sqs.begin());
            moves.pop_back();
            sqs.pop_back();
            changed = true;
        }
    }
    if (moves.empty())
        throw std::invalid_argument("walk: reduces to a point (null-homotopic backtrack chain)");

    CycleWithIndex c;
    c.start = sqs.front();
    c.moves = moves;
    int turns = 0;
    for (std::size_t i = 0; i < moves.size(); ++i)
        turns += turn(moves[i], moves[(i + 1) % moves.size()]);
    if (turns % 4 != 0) throw std::logic_error("walk: turning count not divisible by 4");
    c.index = turns / 4;
    return c;
}

std::vector<CycleWithIndex> cycle_basis(const Origami& o) {
    const int n = o.n();
    // dual graph edges: (i, E) meaning i -> h(i), (i, N) meaning i -> v(i)
    // spanning tree by BFS from square 0, E edges preferred
    std::vector<int> parent(n, -1), parent_move(n, -1);
    std::vector<char> in_tree_E(n, 0), in_tree_N(n, 0);
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    order.push_back(0);
    for (std::size_t q = 0; q < order.size(); ++q) {
        int x = order[q];
        const std::array<std::pair<int, int>, 2> nbrs = {
            std::make_pair(o.h(x), E), std::make_pair(o.v(x), N)};
        for (auto [y, mv] : nbrs) {
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                parent_move[y] = mv;
                (mv == E ? in_tree_E : in_tree_N)[x] = 1;
                order.push_back(y);
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::logic_error("cycle_basis: dual graph disconnected");

    // path of moves from square x back up to the root, then reversed to give
    // root -> x
    auto path_from_root = [&](int x) {
        std::vector<int> up;  // moves x -> root
        std::vector<int> sq_path;
        int y = x;
        while (parent[y] >= 0) {
            up.push_back((parent_move[y] + 2) % 4);  // reverse of the tree edge
            y = parent[y];
        }
        std::vector<int> down(up.size());
        for (std::size_t i = 0; i < up.size(); ++i)
            down[i] = (up[up.size() - 1 - i] + 2) % 4;
        return down;
    };

    std::vector<CycleWithIndex> out;
    for (int i = 0; i < n; ++i) {
        for (int mv : {E, N}) {
            if (mv == E && in_tree_E[i]) continue;
            if (mv == N && in_tree_N[i]) continue;
            int j = step(o, i, mv);
            // walk: root -> i, the non-tree edge i -> j, then j -> root
            std::vector<int> moves = path_from_root(i);
            moves.push_back(mv);
            auto back = path_from_root(j);
            for (auto it = back.rbegin(); it != back.rend(); ++it)
                moves.push_back((*it + 2) % 4);
            out.push_back(CycleWithIndex::trace(o, 0, std::move(moves)));
        }
    }
    if (static_cast<int>(out.size()) != n + 1)
        throw std::logic_error("cycle_basis: expected n+1 fundamental cycles");
    return out;
}

int omega(const Origami& o, const CycleWithIndex& c) {
    if (!stratum_of(o).all_even())
        throw std::invalid_argument("omega: quadratic form needs all zero orders even");
    return ((c.index + 1) % 2 + 2) % 2;
}

namespace {

// A passage of a walk through one square: the chord from the entry side to
// the exit side.  Boundary positions are encoded counterclockwise, scaled by
// 10: the base curve meets side midpoints at E=0, N=10, W=20, S=30; the
// (eps, eps^2)-offset copy meets the sides at E=1, N=9, W=19, S=31.
struct Passage {
    int square;
    int in_dir;   // direction of motion when entering
    int out_dir;  // direction of motion when leaving
};

std::vector<Passage> passages(const Origami& o, const CycleWithIndex& c) {
    std::vector<Passage> out;
    const auto& mv = c.moves;
    int sq = c.start;
    std::vector<int> sqs;
    for (int m : mv) {
        sqs.push_back(sq);
        sq = step(o, sq, m);
    }
    const std::size_t k = mv.size();
    for (std::size_t i = 0; i < k; ++i) {
        // in square sqs[i]: arrived by move mv[(i-1+k)%k], leaves by mv[i]
        out.push_back({sqs[i], mv[(i + k - 1) % k], mv[i]});
    }
    return out;
}

int base_position(int in_dir, bool entry) {
    // entry side is the side opposite the motion direction; exit side is the
    // motion direction side
    int side = entry ? (in_dir + 2) % 4 : in_dir;
    return side * 10;
}

int offset_position(int dir, bool entry) {
    int side = entry ? (dir + 2) % 4 : dir;
    switch (side) {
        case E: return 1;
        case N: return 9;
        case W: return 19;
        case S: return 31;
    }
    throw std::logic_error("bad side");
}

bool chords_cross(int a1, int a2, int b1, int b2) {
    // do {b1,b2} interleave with {a1,a2} on the 40-cycle?
    auto between = [](int lo, int hi, int x) {
        // x strictly inside the ccw arc lo -> hi
        if (lo < hi) return lo < x && x < hi;
        return x > lo || x < hi;
    };
    return between(a1, a2, b1) != between(a1, a2, b2);
}

} // namespace

int intersection_mod2(const Origami& o, const CycleWithIndex& a, const CycleWithIndex& b) {
    auto pa = passages(o, a);
    auto pb = passages(o, b);
    // bucket by square
    std::vector<std::vector<const Passage*>> by_square(o.n());
    for (const auto& p : pb) by_square[p.square].push_back(&p);
    int count = 0;
    for (const auto& p : pa) {
        int a1 = base_position(p.in_dir, true);
        int a2 = base_position(p.out_dir, false);
        for (const Passage* q : by_square[p.square]) {
            int b1 = offset_position(q->in_dir, true);
            int b2 = offset_position(q->out_dir, false);
            if (chords_cross(a1, a2, b1, b2)) ++count;
        }
    }
    return count % 2;
}

QuadraticSpace QuadraticSpace::build(const Origami& o) {
    QuadraticSpace qs;
    qs.basis = cycle_basis(o);
    const int m = static_cast<int>(qs.basis.size());
    qs.omega_values.resize(m);
    for (int i = 0; i < m; ++i) qs.omega_values[i] = omega(o, qs.basis[i]);
    qs.gram.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            qs.gram[i][j] = qs.gram[j][i] = intersection_mod2(o, qs.basis[i], qs.basis[j]);
    return qs;
}

int QuadraticSpace::omega_of(const std::vector<int>& coords) const {
    const int m = static_cast<int>(basis.size());
    int val = 0;
    for (int i = 0; i < m; ++i) {
        if (!coords[i]) continue;
        val ^= omega_values[i];
        for (int j = i + 1; j < m; ++j)
            if (coords[j]) val ^= gram[i][j];
    }
    return val;
}

int spin_parity(const Origami& o) {
    const StratumSpec s = stratum_of(o);
    if (!s.all_even())
        throw std::invalid_argument("spin_parity: stratum has odd-order zeros");
    const int g = s.genus();
    if (g < 2) throw std::invalid_argument("spin_parity: genus must be >= 2");

    QuadraticSpace qs = QuadraticSpace::build(o);
    const int m = static_cast<int>(qs.basis.size());

    // working vectors as coordinate rows over the basis
    std::vector<std::vector<int>> vecs(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) vecs[i][i] = 1;

    auto pairing = [&](const std::vector<int>& x, const std::vector<int>& y) {
        int val = 0;
        for (int i = 0; i < m; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < m; ++j)
                if (y[j]) val ^= qs.gram[i][j];
        }
        return val;
    };

    int arf = 0;
    int pairs = 0;
    std::vector<std::vector<int>> work = vecs;
    while (true) {
        // greedy pivot pair in basis order
        int pi = -1, pj = -1;
        for (std::size_t i = 0; i < work.size() && pi < 0; ++i)
            for (std::size_t j = i + 1; j < work.size(); ++j)
                if (pairing(work[i], work[j]) == 1) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) break;
        auto a = work[pi], b = work[pj];
        arf ^= qs.omega_of(a) & qs.omega_of(b);
        ++pairs;
        std::vector<std::vector<int>> next;
        for (std::size_t k = 0; k < work.size(); ++k) {
            if (static_cast<int>(k) == pi || static_cast<int>(k) == pj) continue;
            auto z = work[k];
            if (pairing(z, b) == 1)
                for (int t = 0; t < m; ++t) z[t] ^= a[t];
            if (pairing(z, a) == 1)
                for (int t = 0; t < m; ++t) z[t] ^= b[t];
            next.push_back(std::move(z));
        }
        work = std::move(next);
    }
    if (pairs != g)
        throw std::logic_error("spin_parity: symplectic rank != 2g");
    // whatever remains spans the radical; the form vanishes there
    for (const auto& z : work)
        if (qs.omega_of(z) != 0)
            throw std::logic_error("spin_parity: quadratic form nonzero on the radical");
    return arf;
}

} // namespace stsurf
