#include "stsurf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stsurf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw std::invalid_argument("permutation: degree must be >= 1");
    std::vector<char> seen(n, 0);
    for (int x : images_) {
        if (x < 0 || x >= n || seen[x])
            throw std::invalid_argument("permutation: image sequence is not a bijection of {0..n-1}");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::full_cycle(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i];
            int b = c[(i + 1) % c.size()];
            if (a < 0 || a >= n) throw std::invalid_argument("from_cycles: label out of range");
            im[a] = b;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& q) const {
    if (degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[i] = images_[q(i)];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = degree();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
}

bool Permutation::is_single_cycle() const {
    int j = images_[0], len = 1;
    while (j != 0) {
        j = images_[j];
        ++len;
    }
    return len == degree();
}

Permutation compose(const Permutation& p, const Permutation& q) { return p.compose(q); }
Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation commutator(const Permutation& h, const Permutation& v) {
    if (h.degree() != v.degree())
        throw std::invalid_argument("commutator: degree mismatch");
    return h.compose(v).compose(h.inverse()).compose(v.inverse());
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
    if (p.degree() != s.degree())
        throw std::invalid_argument("conjugate: degree mismatch");
    return s.compose(p).compose(s.inverse());
}

bool is_transitive_pair(const Permutation& h, const Permutation& v) {
    if (h.degree() != v.degree())
        throw std::invalid_argument("transitivity: degree mismatch");
    const int n = h.degree();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {h(x), v(x), h.inverse()(x), v.inverse()(x)}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

std::string format_cycles(const Permutation& p) {
    std::ostringstream os;
    for (const auto& c : p.cycles()) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i] + 1;
        }
        os << ')';
    }
    return os.str();
}

Permutation parse_cycles(std::string_view text, std::optional<int> degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    int max_label = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("parse_cycles: expected '('");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("parse_cycles: expected label");
            int label = std::stoi(std::string(text.substr(start, i - start)));
            if (label < 1) throw std::invalid_argument("parse_cycles: labels are one-indexed");
            max_label = std::max(max_label, label);
            cyc.push_back(label - 1);
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw std::invalid_argument("parse_cycles: expected ',' or ')'");
        }
        for (std::size_t a = 0; a < cyc.size(); ++a)
            for (std::size_t b = a + 1; b < cyc.size(); ++b)
                if (cyc[a] == cyc[b]) throw std::invalid_argument("parse_cycles: repeated label in cycle");
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    int n = degree.value_or(max_label);
    if (n < max_label)
        throw std::invalid_argument("parse_cycles: explicit degree smaller than largest label");
    if (n < 1) throw std::invalid_argument("parse_cycles: empty input without explicit degree");
    std::vector<char> used(n, 0);
    for (const auto& c : cycles)
        for (int x : c) {
            if (used[x]) throw std::invalid_argument("parse_cycles: label appears in two cycles");
            used[x] = 1;
        }
    return Permutation::from_cycles(n, cycles);
}

} // namespace stsurf
