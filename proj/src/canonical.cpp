#include "stsurf/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsurf {
namespace {

// Apply the relabeling L (old label -> new label) to the pair.
std::pair<Permutation, Permutation> relabel(const Permutation& h, const Permutation& v,
                                            const std::vector<int>& L) {
    const int n = h.degree();
    std::vector<int> hh(n), vv(n);
    for (int i = 0; i < n; ++i) {
        hh[L[i]] = L[h(i)];
        vv[L[i]] = L[v(i)];
    }
    return {Permutation(std::move(hh)), Permutation(std::move(vv))};
}

// Branch-and-bound over relabelings, generating the concatenated image string
// of (h', v') position by position.  Labels are assigned in first-use order,
// so the only true choice points are which unassigned square receives the
// next fresh label when an h-orbit is exhausted.
struct LexMinSearch {
    const Permutation& h;
    const Permutation& v;
    int n;
    std::vector<int> best;
    bool have_best = false;

    std::vector<int> label;    // old -> new, -1 if unassigned
    std::vector<int> unlabel;  // new -> old
    std::vector<int> str;
    int next_free = 0;

    explicit LexMinSearch(const Permutation& h_, const Permutation& v_)
        : h(h_), v(v_), n(h_.degree()), label(n, -1), unlabel(n, -1) {}

    // The current prefix constrains a branch only while it equals the best
    // string's prefix; best can change mid-branch, so recompute (cheap, the
    // strings have length at most 24 here).
    bool tight(int pos) const {
        return have_best && std::equal(str.begin(), str.begin() + pos, best.begin());
    }

    void rec(int pos) {
        if (pos == 2 * n) {
            if (!have_best || str < best) {
                best = str;
                have_best = true;
            }
            return;
        }
        int target = pos < n ? pos : pos - n;
        if (pos < n && unlabel[target] < 0) {
            // choose which unassigned square takes label `target`
            std::vector<int> candidates;
            int best_char = n + 1;
            for (int u = 0; u < n; ++u) {
                if (label[u] >= 0) continue;
                int img = h(u);
                int c = (img == u) ? target : (label[img] >= 0 ? label[img] : target + 1);
                if (c < best_char) {
                    best_char = c;
                    candidates.assign(1, u);
                } else if (c == best_char) {
                    candidates.push_back(u);
                }
            }
            for (int u : candidates) {
                label[u] = target;
                unlabel[target] = u;
                next_free = target + 1;
                step(pos, target);
                for (int l = target; l < next_free; ++l) {
                    label[unlabel[l]] = -1;
                    unlabel[l] = -1;
                }
                next_free = target;
                str.resize(pos);
            }
            return;
        }
        int saved_free = next_free;
        step(pos, target);
        for (int l = saved_free; l < next_free; ++l) {
            label[unlabel[l]] = -1;
            unlabel[l] = -1;
        }
        next_free = saved_free;
        str.resize(pos);
    }

    void step(int pos, int target) {
        const Permutation& p = pos < n ? h : v;
        int u = unlabel[target];
        int img = p(u);
        if (label[img] < 0) {
            label[img] = next_free;
            unlabel[next_free] = img;
            ++next_free;
        }
        int c = label[img];
        if (tight(pos) && c > best[pos]) return;
        str.push_back(c);
        rec(pos + 1);
    }

    std::vector<int> run() {
        for (int start = 0; start < n; ++start) {
            label.assign(n, -1);
            unlabel.assign(n, -1);
            str.clear();
            label[start] = 0;
            unlabel[0] = start;
            next_free = 1;
            rec(0);
        }
        return best;
    }
};

} // namespace

std::pair<Permutation, Permutation> bfs_canonical_form(const Permutation& h, const Permutation& v) {
    if (!is_transitive_pair(h, v))
        throw std::invalid_argument("canonical_form: pair is not transitive (surface disconnected)");
    const int n = h.degree();
    std::vector<int> best_str;
    std::vector<int> best_L;
    std::vector<int> L(n);
    for (int start = 0; start < n; ++start) {
        std::fill(L.begin(), L.end(), -1);
        std::vector<int> order;
        order.reserve(n);
        L[start] = 0;
        order.push_back(start);
        for (std::size_t q = 0; q < order.size(); ++q) {
            int x = order[q];
            for (int y : {h(x), v(x)}) {
                if (L[y] < 0) {
                    L[y] = static_cast<int>(order.size());
                    order.push_back(y);
                }
            }
        }
        std::vector<int> str;
        str.reserve(2 * n);
        for (int i = 0; i < n; ++i) str.push_back(L[h(order[i])]);
        for (int i = 0; i < n; ++i) str.push_back(L[v(order[i])]);
        if (best_str.empty() || str < best_str) {
            best_str = std::move(str);
            best_L = L;
        }
    }
    return relabel(h, v, best_L);
}

std::pair<Permutation, Permutation> canonical_form(const Permutation& h, const Permutation& v) {
    if (h.degree() != v.degree())
        throw std::invalid_argument("canonical_form: degree mismatch");
    if (!is_transitive_pair(h, v))
        throw std::invalid_argument("canonical_form: pair is not transitive (surface disconnected)");
    const int n = h.degree();
    if (n > 12) return bfs_canonical_form(h, v);
    LexMinSearch search(h, v);
    std::vector<int> s = search.run();
    std::vector<int> hh(s.begin(), s.begin() + n);
    std::vector<int> vv(s.begin() + n, s.end());
    return {Permutation(std::move(hh)), Permutation(std::move(vv))};
}

} // namespace stsurf
