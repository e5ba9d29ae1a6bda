#include "stsurf/io.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace stsurf {

std::string to_json_record(const Origami& o) {
    nlohmann::json j;
    j["n"] = o.n();
    j["h"] = o.h.images();
    j["v"] = o.v.images();
    return j.dump();
}

Origami from_json_record(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<int> h = j.at("h").get<std::vector<int>>();
    std::vector<int> v = j.at("v").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(h.size()))
        throw std::invalid_argument("origami record: n does not match image length");
    return Origami(Permutation(std::move(h)), Permutation(std::move(v)));
}

std::string to_cycles_record(const Origami& o) {
    return "r=" + format_cycles(o.h) + " u=" + format_cycles(o.v);
}

Origami from_cycles_record(const std::string& text) {
    auto rpos = text.find("r=");
    auto upos = text.find("u=");
    if (rpos == std::string::npos || upos == std::string::npos || upos < rpos)
        throw std::invalid_argument("cycles record: expected 'r=(...) u=(...)'");
    std::string rpart = text.substr(rpos + 2, upos - rpos - 2);
    std::string upart = text.substr(upos + 2);
    // the degree is the largest label over both parts; parse twice
    Permutation h0 = parse_cycles(rpart);
    Permutation v0 = parse_cycles(upart);
    int n = std::max(h0.degree(), v0.degree());
    return Origami(parse_cycles(rpart, n), parse_cycles(upart, n));
}

Origami read_origami(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty origami input");
    if (text[first] == '{') return from_json_record(text);
    if (text.find("r=") != std::string::npos) return from_cycles_record(text);
    return from_representative(Representative::parse(text.substr(first)));
}

} // namespace stsurf
