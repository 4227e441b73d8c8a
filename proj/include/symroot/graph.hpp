#pragma once

// Finite simple graphs with a fixed node order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "symroot/gf2.hpp"

namespace symroot {

using Permutation = std::vector<std::size_t>;

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t node_count);

    /// Throws Error on self-loops, duplicates or out-of-range indices.
    static Graph from_edges(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
    static Graph path(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph empty(std::size_t n) { return Graph(n); }

    std::size_t node_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept;
    bool has_edge(std::size_t i, std::size_t j) const;
    void add_edge(std::size_t i, std::size_t j);
    std::size_t degree(std::size_t i) const { return adj_.at(i).popcount(); }

    /// Sorted pairs (i < j).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    BitMat adjacency() const;
    const BitVec& neighbors(std::size_t i) const { return adj_.at(i); }

    /// Appends a node adjacent to the nodes set in `neighborhood`.
    Graph with_node(const BitVec& neighborhood) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool connected() const;

    /// Same node count and edge set (labels ignored).
    friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

private:
    std::vector<BitVec> adj_;
    std::vector<std::string> labels_;
};

/// Edge-list text: "n <count>", "e <i> <j>", '#' comments.
Graph parse_graph(std::string_view text);
/// {"nodes": N, "edges": [[i,j], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
std::string graph_to_edge_list(const Graph& g);
/// Dispatches on the first non-space character ('{' means JSON).
Graph parse_graph_any(std::string_view text);

struct InducedSubgraph {
    Graph graph;
    /// origin[i] is the index in the parent of node i of the subgraph.
    std::vector<std::size_t> origin;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<std::size_t>& nodes);

/// Lexicographically least maximum independent set (node_count <= 32).
std::vector<std::size_t> max_coclique(const Graph& g);

/// All adjacency-preserving permutations (node_count <= 10), sorted,
/// identity first. perm[i] is the image of node i.
std::vector<Permutation> automorphisms(const Graph& g);

/// Relabels: node i of g becomes node perm[i] of the result.
Graph permute(const Graph& g, const Permutation& perm);

/// Canonical adjacency code (node_count <= 11): equal codes iff isomorphic
/// graphs. Colour refinement followed by a search over cell orderings.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of graphs on n nodes (n <= 8).
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

/// Every labelled graph on n nodes (n <= 6), in edge-mask order.
std::vector<Graph> all_labelled_graphs(std::size_t n);

/// Dynkin diagrams. A: path 0..n-1. D_n: chain 0..n-3 with fork nodes n-2, n-1
/// attached to node 0. E_n: chain 0..n-2 with branch node n-1 attached to node 2.
/// Only the simply-laced families; see parity_graph for B, C, F, G.
Graph dynkin_graph(char family, std::size_t rank);

}  // namespace symroot
