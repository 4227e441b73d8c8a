#include "symroot/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "symroot/error.hpp"

namespace symroot {

Graph::Graph(std::size_t node_count) : adj_(node_count, BitVec(node_count)) {}

Graph Graph::from_edges(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(node_count);
    for (const auto& [i, j] : edges) {
        if (i >= node_count || j >= node_count) {
            throw Error("edge (" + std::to_string(i) + "," + std::to_string(j) + ") has an out-of-range node index");
        }
        if (i == j) throw Error("self-loop at node " + std::to_string(i));
        if (g.has_edge(i, j)) throw Error("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        g.add_edge(i, j);
    }
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.popcount();
    return twice / 2;
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
    if (i >= adj_.size() || j >= adj_.size()) throw Error("node index out of range");
    return adj_[i].get(j);
}

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= adj_.size() || j >= adj_.size()) throw Error("node index out of range");
    if (i == j) throw Error("self-loop at node " + std::to_string(i));
    adj_[i].set(j);
    adj_[j].set(i);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        for (std::size_t j = i + 1; j < adj_.size(); ++j) {
            if (adj_[i].get(j)) out.emplace_back(i, j);
        }
    }
    return out;
}

BitMat Graph::adjacency() const { return BitMat::from_rows(adj_, adj_.size()); }

Graph Graph::with_node(const BitVec& neighborhood) const {
    const std::size_t n = node_count();
    if (neighborhood.dim() != n) throw DimensionMismatch("neighbourhood indicator has wrong dimension");
    Graph g(n + 1);
    for (std::size_t i = 0; i < n; ++i) g.adj_[i] = adj_[i].resized(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (neighborhood.get(i)) g.add_edge(i, n);
    }
    if (!labels_.empty()) {
        g.labels_ = labels_;
        g.labels_.push_back(std::to_string(n));
    }
    return g;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != node_count()) throw Error("label count does not match node count");
    labels_ = std::move(labels);
}

bool Graph::connected() const {
    const std::size_t n = node_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (!seen[w] && adj_[v].get(w)) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> count;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        std::string tag;
        ls >> tag;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (tag == "n") {
            long long v = -1;
            if (!(ls >> v) || v < 0) throw Error(where + "expected 'n <count>'");
            if (count) throw Error(where + "node count given twice");
            count = static_cast<std::size_t>(v);
        } else if (tag == "e") {
            long long i = -1;
            long long j = -1;
            if (!(ls >> i >> j) || i < 0 || j < 0) throw Error(where + "expected 'e <i> <j>'");
            edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        } else {
            throw Error(where + "unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw Error(where + "trailing content '" + extra + "'");
    }
    if (!count) throw Error("missing 'n <count>' line");
    return Graph::from_edges(*count, edges);
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes")) throw Error("graph JSON needs a \"nodes\" field");
    const auto n = j.at("nodes").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error("graph JSON edges must be pairs");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    Graph g = Graph::from_edges(n, edges);
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
    nlohmann::json out = {{"nodes", g.node_count()}, {"edges", std::move(edges)}};
    if (!g.labels().empty()) out["labels"] = g.labels();
    return out;
}

std::string graph_to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.node_count()) + "\n";
    for (const auto& [i, j] : g.edges()) out += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

Graph parse_graph_any(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("malformed graph JSON: ") + e.what());
        }
    }
    return parse_graph(text);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<std::size_t>& nodes) {
    std::set<std::size_t> seen;
    for (std::size_t v : nodes) {
        if (v >= g.node_count()) throw Error("induced_subgraph: node " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second) throw Error("induced_subgraph: node " + std::to_string(v) + " repeated");
    }
    Graph sub(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (g.has_edge(nodes[a], nodes[b])) sub.add_edge(a, b);
        }
    }
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (std::size_t v : nodes) labels.push_back(g.labels()[v]);
        sub.set_labels(std::move(labels));
    }
    return {std::move(sub), nodes};
}

namespace {

struct CocliqueSearch {
    std::vector<std::uint64_t> nbr;
    std::uint64_t best = 0;
    int best_size = -1;

    void run(std::uint64_t cand, std::uint64_t current, int size) {
        if (cand == 0) {
            if (size > best_size) {
                best_size = size;
                best = current;
            }
            return;
        }
        if (size + std::popcount(cand) <= best_size) return;
        const int v = std::countr_zero(cand);
        const std::uint64_t bit = std::uint64_t{1} << v;
        run(cand & ~bit & ~nbr[v], current | bit, size + 1);
        run(cand & ~bit, current, size);
    }
};

}  // namespace

std::vector<std::size_t> max_coclique(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > 32) throw CapExceeded("max_coclique supports at most 32 nodes");
    CocliqueSearch s;
    s.nbr.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.nbr[i] = g.neighbors(i).to_mask();
    const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    s.run(all, 0, 0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if ((s.best >> i) & 1U) out.push_back(i);
    }
    return out;
}

std::vector<Permutation> automorphisms(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > 10) throw CapExceeded("automorphisms supports at most 10 nodes");
    std::vector<Permutation> out;
    Permutation perm(n);
    std::vector<bool> used(n, false);

    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || g.degree(i) != g.degree(j)) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < i && ok; ++prev) {
                ok = g.has_edge(i, prev) == g.has_edge(j, perm[prev]);
            }
            if (!ok) continue;
            used[j] = true;
            perm[i] = j;
            self(self, i + 1);
            used[j] = false;
        }
    };
    extend(extend, 0);
    return out;
}

Graph permute(const Graph& g, const Permutation& perm) {
    if (perm.size() != g.node_count()) throw Error("permutation has wrong length");
    Graph out(g.node_count());
    for (const auto& [i, j] : g.edges()) out.add_edge(perm.at(i), perm.at(j));
    return out;
}

namespace {

// Stable colouring under iterated neighbourhood refinement; colours are
// numbered by the sorted order of their signatures, so they are invariant.
std::vector<std::size_t> refine_colours(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> colour(n, 0);
    std::size_t classes = 1;
    for (;;) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<std::size_t> around;
            for (std::size_t w = 0; w < n; ++w) {
                if (g.has_edge(v, w)) around.push_back(colour[w]);
            }
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<std::size_t>, std::size_t> names;
        for (const auto& s : sig) names.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [s, name] : names) name = next++;
        for (std::size_t v = 0; v < n; ++v) colour[v] = names.at(sig[v]);
        if (names.size() == classes) break;
        classes = names.size();
    }
    return colour;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > 11) throw CapExceeded("canonical_code supports at most 11 nodes");
    const auto colour = refine_colours(g);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
    std::vector<std::size_t> slot_colour(n);
    for (std::size_t i = 0; i < n; ++i) slot_colour[i] = colour[order[i]];

    std::vector<std::uint64_t> nbr(n);
    for (std::size_t i = 0; i < n; ++i) nbr[i] = g.neighbors(i).to_mask();

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::size_t> placed(n);
    std::vector<bool> used(n, false);
    // Bit layout: pairs (a, b), a < b, enumerated by b then a, most
    // significant first, so prefixes are comparable during the search.
    auto search = [&](auto&& self, std::size_t pos, std::uint64_t code) -> void {
        if (pos == n) {
            best = std::min(best, code);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || colour[v] != slot_colour[pos]) continue;
            std::uint64_t c = code;
            for (std::size_t a = 0; a < pos; ++a) c = (c << 1) | ((nbr[v] >> placed[a]) & 1U);
            const std::size_t remaining = (n * (n - 1)) / 2 - (pos * (pos + 1)) / 2;
            if (remaining < 64 && (c << remaining) > best) continue;
            used[v] = true;
            placed[pos] = v;
            self(self, pos + 1, c);
            used[v] = false;
        }
    };
    search(search, 0, 0);
    return n == 0 ? 0 : best;
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
    if (n > 8) throw CapExceeded("nonisomorphic_graphs supports at most 8 nodes");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> prev{Graph(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        std::map<std::uint64_t, Graph> found;
        for (const Graph& h : prev) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph cand = h.with_node(BitVec::from_mask(m - 1, mask));
                found.emplace(canonical_code(cand), std::move(cand));
            }
        }
        prev.clear();
        for (auto& [code, graph] : found) prev.push_back(std::move(graph));
    }
    return prev;
}

std::vector<Graph> all_labelled_graphs(std::size_t n) {
    if (n > 6) throw CapExceeded("all_labelled_graphs supports at most 6 nodes");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
        }
        out.push_back(std::move(g));
    }
    return out;
}

Graph dynkin_graph(char family, std::size_t rank) {
    switch (family) {
    case 'A':
        if (rank < 1) break;
        return Graph::path(rank);
    case 'D': {
        if (rank < 4) break;
        Graph g = Graph::path(rank - 2);
        g = g.with_node(BitVec::unit(rank - 2, 0));
        return g.with_node(BitVec::unit(rank - 1, 0));
    }
    case 'E': {
        if (rank < 6 || rank > 8) break;
        Graph g = Graph::path(rank - 1);
        return g.with_node(BitVec::unit(rank - 1, 2));
    }
    default:
        break;
    }
    throw Error(std::string("no simply-laced Dynkin diagram ") + family + std::to_string(rank));
}

}  // namespace symroot
