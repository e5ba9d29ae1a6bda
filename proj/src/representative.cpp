#include "stsurf/representative.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stsurf {

Representative Representative::from_rows(std::vector<int> top, std::vector<int> bottom) {
    if (top.size() != bottom.size() || top.size() < 2)
        throw std::invalid_argument("representative: malformed rows");
    const int n = static_cast<int>(top.size()) - 1;
    for (int i = 0; i <= n; ++i)
        if (top[i] != i)
            throw std::invalid_argument(
                "representative: top row must be 0,1,...,N (canonical labeling)");
    std::vector<char> seen(n + 1, 0);
    for (int x : bottom) {
        if (x < 0 || x > n || seen[x])
            throw std::invalid_argument("representative: bottom row symbol set mismatch");
        seen[x] = 1;
    }
    if (bottom.back() != 0)
        throw std::invalid_argument(
            "representative: not one-cylinder form (bottom row must end with the 0)");
    Representative r;
    r.top = std::move(top);
    r.bottom = std::move(bottom);
    return r;
}

Representative Representative::from_map(const std::vector<int>& m) {
    const int n = static_cast<int>(m.size()) - 1;
    if (n < 1) throw std::invalid_argument("representative: empty map");
    std::vector<int> top(n + 1), bottom(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i;
    for (int s = 1; s <= n; ++s) bottom[s - 1] = m[s];
    bottom[n] = 0;
    return from_rows(std::move(top), std::move(bottom));
}

Representative Representative::torus() { return from_rows({0, 1}, {1, 0}); }

std::vector<int> Representative::dezeroed_map() const {
    const int n = squares();
    std::vector<int> m(n + 1, 0);
    for (int i = 0; i < n; ++i) m[i + 1] = bottom[i];
    return m;
}

bool Representative::is_normal_form() const {
    if (squares() == 1) return true;  // the torus, degenerate normal form
    return squares() >= 2 && top[0] == 0 && top[1] == 1 && top[2] == 2 && bottom[0] == 2;
}

Representative Representative::split_symbol(int symbol) const {
    const int n = squares();
    if (symbol < 0 || symbol > n)
        throw std::invalid_argument("split_symbol: unknown symbol");
    const int fresh = n + 1;
    std::vector<int> t, b;
    for (int x : top) {
        t.push_back(x);
        if (x == symbol) t.push_back(fresh);
    }
    for (int x : bottom) {
        b.push_back(x);
        if (x == symbol) b.push_back(fresh);
    }
    // relabel so the new top row is 0,1,...,N+1
    std::vector<int> relab(n + 2, -1);
    for (int i = 0; i <= n + 1; ++i) relab[t[i]] = i;
    for (auto& x : t) x = relab[x];
    for (auto& x : b) x = relab[x];
    return from_rows(std::move(t), std::move(b));
}

Representative Representative::canonical_rotation() const {
    const int n = squares();
    auto m = dezeroed_map();
    std::vector<int> best;
    for (int r = 0; r < n; ++r) {
        // rotate square labels by r along the horizontal cycle
        auto rot = [&](int s) { return (s - 1 + r) % n + 1; };
        auto unrot = [&](int s) { return (s - 1 - r % n + n) % n + 1; };
        std::vector<int> b(n + 1);
        for (int s = 1; s <= n; ++s) b[s - 1] = rot(m[unrot(s)]);
        b[n] = 0;
        if (best.empty() || b < best) best = std::move(b);
    }
    std::vector<int> t(n + 1);
    for (int i = 0; i <= n; ++i) t[i] = i;
    return from_rows(std::move(t), std::move(best));
}

std::string Representative::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < top.size(); ++i) os << (i ? " " : "") << top[i];
    os << "\n";
    for (std::size_t i = 0; i < bottom.size(); ++i) os << (i ? " " : "") << bottom[i];
    os << "\n";
    return os.str();
}

Representative Representative::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line1, line2;
    if (!std::getline(is, line1) || !std::getline(is, line2))
        throw std::invalid_argument("representative: expected two lines");
    auto row = [](const std::string& line) {
        std::vector<int> out;
        std::istringstream ls(line);
        int x;
        while (ls >> x) out.push_back(x);
        return out;
    };
    return from_rows(row(line1), row(line2));
}

} // namespace stsurf
