#include "stsurf/applications.hpp"

#include "stsurf/catalog.hpp"
#include "stsurf/classify.hpp"
#include "stsurf/combinators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stsurf {

int min_filling_intersections(int g, int p) {
    if (g < 0 || p < 0) throw std::invalid_argument("i_{g,p}: negative arguments");
    if (g == 0) {
        if (p < 4) throw std::invalid_argument("i_{g,p}: undefined for g=0, p<4");
        return p % 2 == 0 ? p - 2 : p - 1;
    }
    if (g == 2) {
        if (p <= 2) return 4;
        return 2 * g + p - 2;
    }
    if (p == 0) return 2 * g - 1;
    return 2 * g + p - 2;
}

void CompatibleDecomposition::validate() const {
    if (genus < 0) throw std::invalid_argument("decomposition: negative genus");
    const int m = intersections + 2 - 2 * genus;
    if (static_cast<int>(polygon_sides.size()) != m)
        throw std::invalid_argument("decomposition: expected " + std::to_string(m) +
                                    " polygons (n+2-2g), got " +
                                    std::to_string(polygon_sides.size()));
    int excess = 0;
    for (int s : polygon_sides) {
        if (s < 4 || s % 4 != 0)
            throw std::invalid_argument("decomposition: polygon sides must be positive multiples of 4");
        excess += s / 4 - 1;
    }
    if (excess != 2 * genus - 2)
        throw std::invalid_argument("decomposition: sum of (k_i - 1) must be 2g-2, got " +
                                    std::to_string(excess));
    if (punctures > m)
        throw std::invalid_argument("decomposition: more punctures than regions");
    if (intersections < min_filling_intersections(genus, punctures))
        throw std::invalid_argument("decomposition: n below i_{g,p}");
}

bool genus2_obstructed(const CompatibleDecomposition& d) {
    if (d.genus != 2) return false;
    int eights = static_cast<int>(std::count(d.polygon_sides.begin(), d.polygon_sides.end(), 8));
    int fours = static_cast<int>(std::count(d.polygon_sides.begin(), d.polygon_sides.end(), 4));
    return eights == 2 && fours < 2;
}

namespace {

void place_punctures(FillingPairSurface& out, int punctures) {
    // largest regions first, ties by trace order
    std::vector<int> idx(out.region_sides.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return out.region_sides[a] > out.region_sides[b]; });
    for (int i = 0; i < punctures; ++i) out.puncture_region.push_back(idx[i]);
}

} // namespace

FillingPairSurface build_filling_pair(const CompatibleDecomposition& d) {
    d.validate();
    if (d.genus == 0)
        throw std::invalid_argument("build_filling_pair: genus 0 is not realizable by a "
                                    "translation surface");
    FillingPairSurface out;

    if (d.genus == 1) {
        Representative rep = Representative::torus();
        Recipe recipe;
        for (int i = 1; i < d.intersections; ++i) rep = concat(rep, Representative::torus());
        out.rep = std::move(rep);
    } else if (d.genus == 2) {
        if (genus2_obstructed(d))
            throw std::invalid_argument(
                "build_filling_pair: infeasible decomposition: a filling pair realizing " +
                std::string(d.polygon_sides.size() == 2 ? "{8,8}" : "{8,8,4}") +
                " on genus 2 would be a 1,1 surface in H(1,1) with fewer than 6 squares, "
                "which the hyperelliptic bound excludes");
        int twelves = static_cast<int>(std::count(d.polygon_sides.begin(), d.polygon_sides.end(), 12));
        CatalogEntry base = catalog::hyperelliptic_rep(
            2, twelves == 1 ? catalog::HypKind::single : catalog::HypKind::double_zero);
        Representative rep = base.rep;
        // the bases carry {12,4} resp. {8,8,4,4}; each further 4-gon is a split
        int have = twelves == 1 ? 2 : 4;
        for (int i = have; i < static_cast<int>(d.polygon_sides.size()); ++i)
            rep = add_marked_point(rep, 3);
        out.rep = std::move(rep);
    } else {
        std::vector<int> zeros;
        int fours = 0;
        for (int s : d.polygon_sides) {
            if (s == 4)
                ++fours;
            else
                zeros.push_back(s / 4 - 1);
        }
        StratumSpec target(zeros, 0);
        ConstructResult built = construct(target, default_component(target));
        Representative rep = built.rep;
        for (int i = 0; i < fours; ++i) rep = concat(rep, Representative::torus());
        out.rep = std::move(rep);
        out.recipe = std::move(built.recipe);
    }

    out.region_sides = ribbon_boundaries(from_representative(out.rep));
    std::vector<int> want = d.polygon_sides;
    std::sort(want.begin(), want.end(), std::greater<int>());
    if (out.region_sides != want) {
        auto join = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        throw std::logic_error("build_filling_pair: region multiset mismatch: built {" +
                               join(out.region_sides) + "}, requested {" + join(want) + "}");
    }
    if (out.rep.squares() != d.intersections)
        throw std::logic_error("build_filling_pair: intersection count mismatch");
    place_punctures(out, d.punctures);
    return out;
}

namespace {

struct Mat {
    // [[a, b], [c, d]]
    std::int64_t a = 1, b = 0, c = 0, d = 1;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("thurston_dilatation: integer overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("thurston_dilatation: integer overflow");
    return r;
}

Mat mul(const Mat& x, const Mat& y) {
    Mat r;
    r.a = checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c));
    r.b = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d));
    r.c = checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c));
    r.d = checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d));
    return r;
}

} // namespace

ThurstonResult thurston_dilatation(const std::vector<std::pair<char, int>>& word, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("thurston_dilatation: n must be >= 1");
    if (word.empty()) throw std::invalid_argument("thurston_dilatation: empty word");
    Mat m;
    for (auto [twist, e] : word) {
        Mat t;
        if (twist == 'a') {
            t.b = checked_mul(n, e);
        } else if (twist == 'b') {
            t.c = checked_mul(n, -static_cast<std::int64_t>(e));
        } else {
            throw std::invalid_argument("thurston_dilatation: twist must be 'a' or 'b'");
        }
        m = mul(m, t);
    }
    if (m.b == 0 && m.c == 0 && m.a == m.d)
        throw std::invalid_argument("thurston_dilatation: degenerate word (net identity)");
    ThurstonResult r;
    std::int64_t tr = checked_add(m.a, m.d);
    r.trace = tr < 0 ? -tr : tr;
    r.pseudo_anosov = r.trace > 2;
    if (r.pseudo_anosov) {
        double t = static_cast<double>(r.trace);
        r.dilatation = (t + std::sqrt(t * t - 4.0)) / 2.0;
        r.log_dilatation = std::log(r.dilatation);
    }
    return r;
}

std::vector<std::pair<char, int>> parse_twist_word(const std::string& text) {
    std::vector<std::pair<char, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() < 2 || (item[0] != 'a' && item[0] != 'b'))
            throw std::invalid_argument("twist word: entries look like a1, b-1, a2");
        out.emplace_back(item[0], std::stoi(item.substr(1)));
    }
    if (out.empty()) throw std::invalid_argument("twist word: empty");
    return out;
}

} // namespace stsurf
