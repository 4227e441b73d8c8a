#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "symroot/error.hpp"
#include "symroot/graph.hpp"

using namespace symroot;

namespace {

std::vector<oracle::Mask> adjacency_masks(const Graph& g) {
    std::vector<oracle::Mask> out;
    for (std::size_t i = 0; i < g.node_count(); ++i) out.push_back(g.neighbors(i).to_mask());
    return out;
}

}  // namespace

TEST_CASE("edge validation") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
    const Graph g = Graph::from_edges(3, {{2, 0}});
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
}

TEST_CASE("nonisomorphic graph counts") {
    const std::size_t total[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(nonisomorphic_graphs(n).size() == total[n]);
}

TEST_CASE("canonical code agrees with brute-force canonical form") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::vector<oracle::Mask>> forms;
        std::set<std::uint64_t> codes;
        for (const auto& g : all_labelled_graphs(n)) {
            forms.insert(oracle::canonical_form(adjacency_masks(g)));
            codes.insert(canonical_code(g));
        }
        CHECK(forms.size() == codes.size());
    }
}

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(dynkin_graph('D', 4)).size() == 6);
    CHECK(automorphisms(dynkin_graph('A', 5)).size() == 2);
    CHECK(automorphisms(dynkin_graph('E', 7)).size() == 1);
    CHECK(automorphisms(Graph::complete(5)).size() == 120);
    for (const auto& p : automorphisms(dynkin_graph('D', 5))) CHECK(permute(dynkin_graph('D', 5), p) == dynkin_graph('D', 5));
}

TEST_CASE("dynkin numbering") {
    const Graph d5 = dynkin_graph('D', 5);
    CHECK(d5.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {0, 4}, {1, 2}});
    const Graph e6 = dynkin_graph('E', 6);
    CHECK(e6.has_edge(2, 5));
    CHECK(e6.degree(2) == 3);
    CHECK_THROWS_AS(dynkin_graph('E', 9), Error);
    CHECK_THROWS_AS(dynkin_graph('D', 3), Error);
}

TEST_CASE("max coclique matches subset enumeration") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            const auto c = max_coclique(g);
            CHECK(c.size() == oracle::max_coclique_size(adjacency_masks(g)));
            for (auto a : c)
                for (auto b : c) CHECK_FALSE(g.has_edge(a, b));
        }
}

TEST_CASE("parsing edge lists and JSON") {
    const Graph a = parse_graph_any("# star\nn 4\ne 0 1\ne 0 2\ne 0 3\n");
    const Graph b = parse_graph_any(R"({"nodes": 4, "edges": [[0,1],[0,2],[0,3]]})");
    CHECK(a == b);
    CHECK(graph_from_json(graph_to_json(a)) == a);
    CHECK(parse_graph(graph_to_edge_list(a)) == a);
    CHECK_THROWS_AS(parse_graph_any("n 2\ne 0 5\n"), Error);
}

TEST_CASE("induced subgraph and with_node") {
    const Graph p = Graph::path(4);
    const auto sub = induced_subgraph(p, {3, 1, 2});
    CHECK(sub.graph.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
    const Graph q = p.with_node(BitVec::from_string("1001"));
    CHECK(q.node_count() == 5);
    CHECK(q.has_edge(4, 0));
    CHECK(q.has_edge(4, 3));
    CHECK(q.edge_count() == 5);
}
