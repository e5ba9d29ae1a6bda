#include "stsurf/cli.hpp"

#include "stsurf/applications.hpp"
#include "stsurf/catalog.hpp"
#include "stsurf/census.hpp"
#include "stsurf/classify.hpp"
#include "stsurf/combinators.hpp"
#include "stsurf/io.hpp"
#include "stsurf/planner.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace stsurf {
namespace {

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int default_jobs() {
    if (const char* env = std::getenv("STSURF_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

std::string classify_line(const Origami& o) {
    StratumSpec s = stratum_of(o);
    int hc = static_cast<int>(cylinder_decomposition(o, Direction::horizontal).cylinders.size());
    int vc = static_cast<int>(cylinder_decomposition(o, Direction::vertical).cylinders.size());
    std::ostringstream os;
    os << "stratum=" << s.to_string();
    if (s.genus() >= 2) {
        ComponentLabel c = classify(o).component;
        os << " component=" << to_string(c);
        os << " cylinders=" << hc << "," << vc;
        os << " squares=" << o.n();
        os << " minimal=" << (o.n() == min_squares_11(s, c) && hc == 1 && vc == 1 ? "yes" : "no");
    } else {
        os << " component=connected cylinders=" << hc << "," << vc << " squares=" << o.n()
           << " minimal=" << (hc == 1 && vc == 1 ? "yes" : "no");
    }
    return os.str();
}

// keys as printed by `catalog list`
CatalogEntry entry_for_key(const std::string& key) {
    using namespace catalog;
    std::string k = key;
    if (k.rfind("exc:", 0) == 0) k = k.substr(4);
    for (const auto& name : exceptional_keys())
        if (name == k) return exceptional(k);
    auto nums = [&](const std::string& s) {
        std::vector<int> out;
        int cur = 0;
        bool in = false;
        for (char c : s) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                cur = cur * 10 + (c - '0');
                in = true;
            } else if (in) {
                out.push_back(cur);
                cur = 0;
                in = false;
            }
        }
        if (in) out.push_back(cur);
        return out;
    };
    auto v = nums(k);
    if (k.rfind("hyp(", 0) == 0 && v.size() == 1) return hyperelliptic_rep(v[0] / 2 + 1, HypKind::single);
    if (k.rfind("hyp(", 0) == 0 && v.size() == 2) return hyperelliptic_rep(v[0] + 1, HypKind::double_zero);
    if (k.rfind("oddmin(", 0) == 0) return even_zero_base(v[0], ComponentLabel::odd);
    if (k.rfind("evenmin(", 0) == 0) return even_zero_base(v[0], ComponentLabel::even);
    if (k.rfind("2odd(", 0) == 0) return family_2odd(v[0] / 2);
    if (k.rfind("2even(", 0) == 0) return family_2even(v[0] / 2);
    if (k.rfind("2g31(", 0) == 0) return family_2g31((v[0] - 1) / 2);
    if (k.rfind("2g5(", 0) == 0)
        return v[0] % 4 == 3 ? family_2g5_4k3((v[0] - 3) / 4) : family_2g5_4k1((v[0] - 1) / 4);
    if (k.rfind("bot(", 0) == 0 && v.size() == 2) return family_bot((v[1] - 1) / 2);
    if (k.rfind("H(", 0) == 0 && v.size() == 3 && v[1] == 1 && v[2] == 1)
        return v[0] % 4 == 2 ? family_4k2_11((v[0] - 2) / 4) : family_4k_11(v[0] / 4);
    throw std::invalid_argument("catalog: unknown key " + key);
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"square-tiled surfaces with one horizontal and one vertical cylinder"};
    app.name("stsurf");
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct",
                                           "minimal 1,1 surface in a stratum component");
    std::string opt_stratum, opt_component = "default", opt_format = "rows";
    c_construct->add_option("--stratum", opt_stratum, "zero orders, e.g. 6,2 (use 0 entries for marked points)")->required();
    c_construct->add_option("--component", opt_component, "hyp|odd|even|nonhyp|connected");
    c_construct->add_option("--format", opt_format, "rows|json|cycles|recipe");

    // classify
    auto* c_classify = app.add_subcommand("classify", "classify an origami read from stdin");
    std::string opt_in;
    c_classify->add_option("--in", opt_in, "read from file instead of stdin");

    // census
    auto* c_census = app.add_subcommand("census", "enumerate origamis up to conjugacy");
    int opt_squares = 0;
    std::string opt_cstratum, opt_cyl, opt_out, opt_ccomp;
    bool opt_count_only = false;
    int opt_jobs = default_jobs();
    c_census->add_option("--squares", opt_squares, "number of squares")->required();
    c_census->add_option("--stratum", opt_cstratum, "zero-order filter, e.g. 4 or 2,2 (0 entries fix marked points)");
    c_census->add_option("--component", opt_ccomp, "component filter");
    c_census->add_option("--cyl", opt_cyl, "cylinder filter, e.g. 1,1");
    c_census->add_option("--jobs", opt_jobs, "worker count");
    c_census->add_option("--out", opt_out, "write records to file");
    c_census->add_flag("--count-only", opt_count_only, "summary only");

    // catalog
    auto* c_catalog = app.add_subcommand("catalog", "the closed-form surface families");
    auto* c_list = c_catalog->add_subcommand("list", "list entries");
    int opt_max = 20;
    c_list->add_option("--max-squares", opt_max, "size cutoff");
    auto* c_emit = c_catalog->add_subcommand("emit", "emit one entry in two-row format");
    std::string opt_key;
    c_emit->add_option("--key", opt_key, "entry name as printed by list")->required();
    c_catalog->require_subcommand(1);

    // combine
    auto* c_combine = app.add_subcommand("combine", "surgeries on two-row representatives");
    std::string opt_op;
    int opt_symbol = -1;
    c_combine->add_option("--op", opt_op, "concat|rswap|lswap|gadget2|mark")->required();
    c_combine->add_option("--symbol", opt_symbol, "side label for --op mark");

    // filling-pair
    auto* c_fp = app.add_subcommand("filling-pair", "realize a compatible decomposition");
    int opt_genus = 0, opt_punctures = 0, opt_inters = 0;
    std::string opt_polygons;
    c_fp->add_option("--genus", opt_genus)->required();
    c_fp->add_option("--punctures", opt_punctures);
    c_fp->add_option("--intersections", opt_inters)->required();
    c_fp->add_option("--polygons", opt_polygons, "side counts, e.g. 20,4,4")->required();

    // dilatation
    auto* c_dil = app.add_subcommand("dilatation", "Thurston-construction twist words");
    std::int64_t opt_n = 0;
    std::string opt_word;
    c_dil->add_option("--n", opt_n, "intersection number")->required();
    c_dil->add_option("--word", opt_word, "e.g. a1,b-1")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_construct) {
            StratumSpec s = parse_stratum(opt_stratum);
            ComponentLabel c = opt_component == "default" ? default_component(s)
                                                          : component_from_string(opt_component);
            ConstructResult r = construct(s, c);
            if (opt_format == "rows") {
                out << r.rep.to_text();
            } else if (opt_format == "json") {
                out << to_json_record(from_representative(r.rep)) << "\n";
            } else if (opt_format == "cycles") {
                out << to_cycles_record(from_representative(r.rep)) << "\n";
            } else if (opt_format == "recipe") {
                for (const auto& st : r.recipe.steps)
                    out << st.op << " " << st.detail << " -> " << st.stratum.to_string() << "/"
                        << to_string(st.component) << " squares=" << st.squares << "\n";
                out << r.rep.to_text();
            } else {
                err << "error: unknown format " << opt_format << "\n";
                return 1;
            }
            return 0;
        }
        if (*c_classify) {
            std::string text;
            if (!opt_in.empty()) {
                std::ifstream f(opt_in);
                if (!f) {
                    err << "error: cannot open " << opt_in << "\n";
                    return 1;
                }
                text = read_all(f);
            } else {
                text = read_all(in);
            }
            out << classify_line(read_origami(text)) << "\n";
            return 0;
        }
        if (*c_census) {
            CensusQuery q;
            q.n = opt_squares;
            q.jobs = opt_jobs;
            if (!opt_cstratum.empty()) {
                StratumSpec s = parse_stratum(opt_cstratum);
                q.zero_orders = s.zero_orders;
                if (opt_cstratum.find(",0") != std::string::npos ||
                    opt_cstratum.rfind("0,", 0) == 0)
                    q.marked_points = s.marked_points;
            }
            if (!opt_ccomp.empty()) q.component = component_from_string(opt_ccomp);
            if (!opt_cyl.empty()) {
                auto comma = opt_cyl.find(',');
                if (comma == std::string::npos) {
                    err << "error: --cyl wants H,V\n";
                    return 1;
                }
                q.cylinders = {std::stoi(opt_cyl.substr(0, comma)),
                               std::stoi(opt_cyl.substr(comma + 1))};
            }
            auto records = census_enumerate(q);
            std::ostream* rec_out = &out;
            std::ofstream file;
            if (!opt_out.empty()) {
                file.open(opt_out);
                if (!file) {
                    err << "error: cannot open " << opt_out << "\n";
                    return 1;
                }
                rec_out = &file;
            }
            std::map<std::string, long long> summary;
            for (const auto& r : records) {
                if (!opt_count_only)
                    *rec_out << to_json_record(r.origami()) << "\n";
                std::ostringstream key;
                key << r.stratum.to_string() << " " << r.component << " " << r.hcyl << ","
                    << r.vcyl;
                ++summary[key.str()];
            }
            out << "# stratum component cylinders count\n";
            for (const auto& [k, cnt] : summary) out << k << " " << cnt << "\n";
            out << "# total " << records.size() << "\n";
            return 0;
        }
        if (*c_catalog) {
            if (*c_list) {
                for (const auto& e : catalog::all_entries(opt_max)) {
                    out << e.name << " " << e.stratum.to_string() << " " << to_string(e.component)
                        << " squares=" << e.rep.squares();
                    if (e.bottom_leaving) out << " bottom_leaving=" << *e.bottom_leaving;
                    out << "\n";
                }
            } else {
                out << entry_for_key(opt_key).rep.to_text();
            }
            return 0;
        }
        if (*c_combine) {
            std::string text = read_all(in);
            std::istringstream is(text);
            auto next_rep = [&is]() {
                std::string l1, l2;
                if (!std::getline(is, l1) || !std::getline(is, l2))
                    throw std::invalid_argument("combine: expected two-row representatives on stdin");
                return Representative::parse(l1 + "\n" + l2 + "\n");
            };
            Representative a = next_rep();
            Representative r = a;
            if (opt_op == "concat")
                r = concat(a, next_rep());
            else if (opt_op == "rswap")
                r = right_swap_concat(a, next_rep());
            else if (opt_op == "lswap")
                r = left_swap_concat(a, next_rep());
            else if (opt_op == "gadget2")
                r = order2_gadget(a);
            else if (opt_op == "mark") {
                if (opt_symbol < 0)
                    throw std::invalid_argument("combine: --op mark needs --symbol");
                r = add_marked_point(a, opt_symbol);
            } else {
                err << "error: unknown op " << opt_op << "\n";
                return 1;
            }
            out << r.to_text();
            return 0;
        }
        if (*c_fp) {
            CompatibleDecomposition d;
            d.genus = opt_genus;
            d.punctures = opt_punctures;
            d.intersections = opt_inters;
            {
                std::stringstream ss(opt_polygons);
                std::string item;
                while (std::getline(ss, item, ',')) d.polygon_sides.push_back(std::stoi(item));
                std::sort(d.polygon_sides.begin(), d.polygon_sides.end(), std::greater<int>());
            }
            FillingPairSurface f = build_filling_pair(d);
            out << f.rep.to_text();
            out << "regions=";
            for (std::size_t i = 0; i < f.region_sides.size(); ++i)
                out << (i ? "," : "") << f.region_sides[i];
            out << "\n";
            if (!f.puncture_region.empty()) {
                out << "punctures=";
                for (std::size_t i = 0; i < f.puncture_region.size(); ++i)
                    out << (i ? "," : "") << f.puncture_region[i];
                out << "\n";
            }
            return 0;
        }
        if (*c_dil) {
            ThurstonResult r = thurston_dilatation(parse_twist_word(opt_word), opt_n);
            out << "trace=" << r.trace << " pseudo_anosov=" << (r.pseudo_anosov ? "yes" : "no");
            if (r.pseudo_anosov)
                out << " dilatation=" << std::setprecision(15) << r.dilatation
                    << " log_dilatation=" << r.log_dilatation;
            out << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 1;
}

} // namespace stsurf
