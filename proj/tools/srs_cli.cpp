// srs: command-line front end for the symroot library.

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symroot/cartan.hpp"
#include "symroot/error.hpp"
#include "symroot/extend.hpp"
#include "symroot/graph.hpp"
#include "symroot/grp2.hpp"
#include "symroot/srs.hpp"
#include "symroot/verify.hpp"

namespace {

using nlohmann::json;
using namespace symroot;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph_path;
    std::string family;
    std::size_t rank = 0;
    std::string format = "json";
    std::uint64_t seed = 20240611;
    std::optional<std::size_t> max_nodes;
    std::optional<std::size_t> max_rank;
    bool quick = false;
    std::string suite = "all";
    std::string srs_path;
    std::string other_path;
    std::string indicator;
    bool full_order = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const json::parse_error& e) {
        throw Error("'" + path + "' is not valid JSON: " + e.what());
    }
}

char family_letter(const Options& o) {
    if (o.family.size() != 1) throw UsageError("--family takes a single letter A..G");
    return static_cast<char>(std::toupper(static_cast<unsigned char>(o.family[0])));
}

bool simply_laced(char f) { return f == 'A' || f == 'D' || f == 'E'; }

/// The graph named by --graph, or the Dynkin/parity graph of --family/--rank.
Graph input_graph(const Options& o) {
    if (!o.graph_path.empty() && !o.family.empty()) throw UsageError("give either --graph or --family, not both");
    if (!o.graph_path.empty()) return parse_graph_any(read_input(o.graph_path));
    if (o.family.empty()) throw UsageError("a graph is required (--graph or --family/--rank)");
    const char f = family_letter(o);
    if (o.rank == 0) throw UsageError("--family requires --rank");
    return simply_laced(f) ? dynkin_graph(f, o.rank) : parity_graph(cartan_datum(f, o.rank));
}

json type_json(SpaceType t) { return json::array({t.n, t.k}); }

json multiplicities(const std::vector<QuotientClass>& classes) {
    std::map<SpaceType, std::size_t> counts;
    for (const auto& c : classes) ++counts[c.srs.type()];
    json out = json::array();
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) out.push_back({{"type", type_json(it->first)}, {"count", it->second}});
    return out;
}

json matrix_json(const BitMat& m) { return m.to_strings(); }

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        bool flat = true;
        for (const auto& e : v) flat = flat && !e.is_structured();
        if (flat) {
            std::string s;
            for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar_text(e);
            return "[" + s + "]";
        }
    }
    return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (v.is_object()) {
        for (const auto& [k, e] : v.items()) flatten(e, prefix.empty() ? k : prefix + "." + k, rows);
        return;
    }
    if (v.is_array() && !v.empty() && v.front().is_structured()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
        return;
    }
    rows.emplace_back(prefix, scalar_text(v));
}

void emit(const json& out, const Options& o) {
    if (o.format == "json") {
        std::cout << out.dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(out, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

int cmd_type(const Options& o) {
    emit({{"type", type_json(minimal_srs(input_graph(o)).type())}}, o);
    return exit_ok;
}

int cmd_minimal(const Options& o) {
    if (!o.family.empty() && simply_laced(family_letter(o)) && o.graph_path.empty()) {
        const Srs s = ade_srs(family_letter(o), o.rank);
        json out = srs_to_json(s);
        json sym = json::array();
        for (const auto& f : s.deco()) sym.push_back(symbolic(f, s.type()));
        out["symbolic"] = std::move(sym);
        emit(out, o);
        return exit_ok;
    }
    emit(srs_to_json(minimal_srs(input_graph(o))), o);
    return exit_ok;
}

int cmd_quotients(const Options& o) {
    const auto classes = enumerate_quotients(input_graph(o));
    json list = json::array();
    for (const auto& c : classes) {
        json kernel = json::array();
        for (const auto& u : c.kernel) kernel.push_back(u.to_string());
        list.push_back({{"type", type_json(c.srs.type())}, {"kernel", std::move(kernel)}, {"srs", srs_to_json(c.srs)}});
    }
    emit({{"count", classes.size()}, {"multiplicities", multiplicities(classes)}, {"classes", std::move(list)}}, o);
    return exit_ok;
}

int cmd_extend(const Options& o) {
    Srs s = !o.srs_path.empty() ? srs_from_json(read_json(o.srs_path)) : minimal_srs(input_graph(o));
    if (o.indicator.size() != s.node_count()) {
        throw UsageError("--indicator needs one bit per node (" + std::to_string(s.node_count()) + ")");
    }
    const auto ext = extend_minimal(s, BitVec::from_string(o.indicator));
    emit({{"srs", srs_to_json(ext.srs)}, {"witness", witness_to_json(ext.witness)}}, o);
    return exit_ok;
}

int cmd_iso(const Options& o) {
    if (o.srs_path.empty() || o.other_path.empty()) throw UsageError("iso needs --srs and --other");
    const Srs a = srs_from_json(read_json(o.srs_path));
    const Srs b = srs_from_json(read_json(o.other_path));
    const auto map = srs_isomorphic(a, b);
    json out = {{"isomorphic", map.has_value()}};
    out["matrix"] = map ? matrix_json(map->matrix()) : json(nullptr);
    emit(out, o);
    return exit_ok;
}

int cmd_ade(const Options& o) {
    const char f = family_letter(o);
    const Srs s = ade_srs(f, o.rank);
    json table = json::array();
    for (const auto& [t, count] : ade_table(f, o.rank)) table.push_back({{"type", type_json(t)}, {"count", count}});
    json deco = json::array();
    for (std::size_t p = 0; p < s.node_count(); ++p) {
        deco.push_back({{"node", p}, {"vector", s.deco(p).to_string()}, {"symbolic", symbolic(s.deco(p), s.type())}});
    }
    emit({{"diagram", o.family + std::to_string(o.rank)},
          {"type", type_json(s.type())},
          {"table", std::move(table)},
          {"decorations", std::move(deco)}},
         o);
    return exit_ok;
}

int cmd_weyl(const Options& o) {
    const WeylRep rep = weyl_rep(cartan_datum(family_letter(o), o.rank));
    const std::size_t d = rep.space().dim();
    json gens = json::array();
    for (const auto& g : rep.generators) gens.push_back(matrix_json(g));
    json order = nullptr;
    if (o.full_order) {
        order = group_order_schreier_sims(rep);
    } else if (o.rank <= 4) {
        order = group_order(rep);
    }
    json orbits = json::array();
    if (d <= 12) {
        std::vector<bool> seen(std::size_t{1} << d, false);
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << d); ++m) {
            if (seen[m]) continue;
            json orbit = json::array();
            for (const auto& v : weyl_orbit(rep, BitVec::from_mask(d, m))) {
                seen[v.to_mask()] = true;
                orbit.push_back(v.to_string());
            }
            orbits.push_back(std::move(orbit));
        }
    }
    json fibers = json::array();
    for (const auto& fb : root_fibers(rep)) fibers.push_back({{"image", fb.image.to_string()}, {"roots", fb.roots.size()}});
    emit({{"datum", rep.datum.name},
          {"parity_graph", graph_to_json(rep.srs.graph())},
          {"type", type_json(rep.srs.type())},
          {"roots", rep.root_set.roots.size()},
          {"generators", std::move(gens)},
          {"group_order", order},
          {"orbits", std::move(orbits)},
          {"fibers", std::move(fibers)}},
         o);
    return exit_ok;
}

int cmd_group(const Options& o) {
    const Srs s = minimal_srs(input_graph(o));
    const CocycleGroup grp = make_group(s.space());
    const auto lifts = lift_decoration(s, grp);
    json table = json::array();
    for (std::size_t p = 0; p < lifts.size(); ++p) {
        table.push_back({{"node", p}, {"vec", lifts[p].vec.to_string()}, {"sign", lifts[p].sign ? 1 : 0}});
    }
    const auto b = burnside_check(grp, lifts);
    const Graph comm = commutativity_graph(grp, lifts);
    emit({{"order", grp.order()},
          {"type", type_json(s.type())},
          {"center_order", std::uint64_t{1} << (s.type().k + 1)},
          {"sign", to_string(extraspecial_sign(grp))},
          {"beta", matrix_json(grp.beta())},
          {"lifts", std::move(table)},
          {"commutativity_graph", graph_to_json(comm)},
          {"reconstructs_graph", comm == s.graph()},
          {"burnside", {{"generates", b.generates}, {"minimal", b.minimal}, {"basis_size", b.basis_size}}}},
         o);
    return exit_ok;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.max_nodes = o.max_nodes;
    vo.max_rank = o.max_rank;
    vo.quick = o.quick;
    vo.seed = o.seed;
    const auto reports = run_suite(o.suite, vo);
    if (o.format == "json") {
        std::cout << report_to_json(reports).dump() << "\n";
    } else {
        std::cout << report_to_text(reports);
    }
    for (const auto& r : reports) {
        if (!r.passed()) return exit_failure;
    }
    return exit_ok;
}

int cmd_coclique(const Options& o) {
    const auto c = coclique_bound_check(input_graph(o));
    emit({{"n", c.n}, {"gamma", c.gamma}, {"bound", c.bound}, {"holds", c.holds}, {"coclique", c.coclique}}, o);
    return c.holds ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic root systems over F2"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", o.seed, "Seed for randomized checks");
    };
    auto graph_opts = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph_path, "Graph file (edge list or JSON, '-' for stdin)");
        sub->add_option("--family", o.family, "Cartan family A..G")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
        sub->add_option("--rank", o.rank, "Rank of the family");
    };
    auto family_opts = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "Cartan family")->required()->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
        sub->add_option("--rank", o.rank, "Rank")->required()->check(CLI::PositiveNumber);
    };

    std::map<CLI::App*, int (*)(const Options&)> handlers;
    auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        handlers[sub] = fn;
        return sub;
    };

    graph_opts(add("type", "Type (n,k) of the minimal SRS", cmd_type));
    graph_opts(add("minimal", "Minimal SRS as JSON", cmd_minimal));
    graph_opts(add("quotients", "All quotients of the minimal SRS", cmd_quotients));
    auto* ext = add("extend", "Extend an SRS by one node", cmd_extend);
    graph_opts(ext);
    ext->add_option("--srs", o.srs_path, "SRS JSON file");
    ext->add_option("--indicator", o.indicator, "Neighbourhood bits of the new node")->required();
    auto* iso = add("iso", "Isomorphism test of two SRS on the same graph", cmd_iso);
    iso->add_option("--srs", o.srs_path, "First SRS JSON")->required();
    iso->add_option("--other", o.other_path, "Second SRS JSON")->required();
    auto* ade = add("ade", "Explicit ADE decorations and quotient table", cmd_ade);
    ade->add_option("--family", o.family, "A, D or E")->required()->check(CLI::IsMember({"A", "D", "E"}));
    ade->add_option("--rank", o.rank, "Rank")->required()->check(CLI::PositiveNumber);
    auto* weyl = add("weyl", "Weyl group action on the parity-graph SRS", cmd_weyl);
    family_opts(weyl);
    weyl->add_flag("--full-order", o.full_order, "Compute the image order by Schreier-Sims at any rank");
    graph_opts(add("group", "Cocycle 2-group realizing the minimal SRS", cmd_group));
    auto* ver = add("verify", "Run property suites", cmd_verify);
    ver->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember({"restriction", "extension", "weyl", "group", "coclique", "all"}));
    ver->add_option("--max-nodes", o.max_nodes, "Node cap for graph sweeps");
    ver->add_option("--max-rank", o.max_rank, "Rank cap for root system sweeps");
    ver->add_flag("--quick", o.quick, "Smaller caps");
    graph_opts(add("coclique", "Coclique bound n <= |G| - gamma", cmd_coclique));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    for (const auto& [sub, fn] : handlers) {
        if (!sub->parsed()) continue;
        try {
            return fn(o);
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return exit_usage;
        } catch (const symroot::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_failure;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_failure;
        }
    }
    return exit_usage;
}
