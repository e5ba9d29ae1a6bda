#include "stsurf/stratum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stsurf {

StratumSpec::StratumSpec(std::vector<int> orders, int marked)
    : zero_orders(std::move(orders)), marked_points(marked) {
    for (int k : zero_orders)
        if (k < 1) throw std::invalid_argument("stratum: zero orders must be >= 1");
    if (marked_points < 0) throw std::invalid_argument("stratum: negative marked point count");
    if (total_order() % 2 != 0)
        throw std::invalid_argument("stratum: sum of zero orders must be even (= 2g-2)");
    std::sort(zero_orders.begin(), zero_orders.end(), std::greater<int>());
}

int StratumSpec::total_order() const {
    return std::accumulate(zero_orders.begin(), zero_orders.end(), 0);
}

int StratumSpec::genus() const { return total_order() / 2 + 1; }

bool StratumSpec::all_even() const {
    return std::all_of(zero_orders.begin(), zero_orders.end(), [](int k) { return k % 2 == 0; });
}

std::string StratumSpec::to_string() const {
    std::ostringstream os;
    os << "H(";
    bool first = true;
    for (int k : zero_orders) {
        if (!first) os << ",";
        os << k;
        first = false;
    }
    for (int i = 0; i < marked_points; ++i) {
        if (!first) os << ",";
        os << 0;
        first = false;
    }
    os << ")";
    return os.str();
}

std::string to_string(ComponentLabel c) {
    switch (c) {
        case ComponentLabel::hyperelliptic: return "hyperelliptic";
        case ComponentLabel::odd: return "odd";
        case ComponentLabel::even: return "even";
        case ComponentLabel::nonhyperelliptic: return "nonhyperelliptic";
        case ComponentLabel::connected: return "connected";
    }
    return "?";
}

ComponentLabel component_from_string(const std::string& s) {
    if (s == "hyp" || s == "hyperelliptic") return ComponentLabel::hyperelliptic;
    if (s == "odd") return ComponentLabel::odd;
    if (s == "even") return ComponentLabel::even;
    if (s == "nonhyp" || s == "nonhyperelliptic") return ComponentLabel::nonhyperelliptic;
    if (s == "connected" || s == "c") return ComponentLabel::connected;
    throw std::invalid_argument("unknown component label: " + s);
}

std::vector<ComponentLabel> components_of(const StratumSpec& s) {
    const int g = s.genus();
    if (g < 2) throw std::invalid_argument("components_of: genus must be >= 2");
    const auto& z = s.zero_orders;
    using C = ComponentLabel;
    // genus 2: both strata are connected and coincide with their
    // hyperelliptic component
    if (g == 2) return {C::hyperelliptic};
    if (g == 3) {
        if (z == std::vector<int>{4} || z == std::vector<int>{2, 2})
            return {C::hyperelliptic, C::odd};
        return {C::connected};
    }
    // genus >= 4
    if (z.size() == 1) return {C::hyperelliptic, C::even, C::odd};
    if (z.size() == 2 && z[0] == z[1]) {
        if (z[0] % 2 == 0) return {C::hyperelliptic, C::even, C::odd};  // H(2l,2l), l >= 2
        return {C::hyperelliptic, C::nonhyperelliptic};                 // H(2l-1,2l-1), l >= 2
    }
    if (s.all_even()) return {C::even, C::odd};
    return {C::connected};
}

bool component_admissible(const StratumSpec& s, ComponentLabel c) {
    auto list = components_of(s);
    return std::find(list.begin(), list.end(), c) != list.end();
}

int min_squares(const StratumSpec& s) {
    return 2 * s.genus() + s.num_zeros() - 2 + s.marked_points;
}

int min_squares_11(const StratumSpec& s, ComponentLabel c) {
    if (!component_admissible(s, c))
        throw std::invalid_argument("min_squares_11: component " + to_string(c) +
                                    " does not exist in " + s.to_string());
    if (c == ComponentLabel::hyperelliptic) {
        const int g = s.genus();
        int bound = s.num_zeros() == 1 ? 4 * g - 4 : 4 * g - 2;
        // extra marked points beyond the ones the bound already forces each
        // cost one square
        return std::max(bound, min_squares(s));
    }
    return min_squares(s);
}

StratumSpec parse_stratum(const std::string& text) {
    std::vector<int> orders;
    int marked = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("parse_stratum: empty entry");
        int k = std::stoi(item);
        if (k == 0)
            ++marked;
        else if (k > 0)
            orders.push_back(k);
        else
            throw std::invalid_argument("parse_stratum: negative order");
    }
    if (orders.empty() && marked == 0) throw std::invalid_argument("parse_stratum: empty stratum");
    return StratumSpec(std::move(orders), marked);
}

} // namespace stsurf
