#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qpa {

/// Simple undirected graph on labeled vertices. Edges are stored as ordered
/// pairs (i, j) with 0 <= i < j < n; public I/O is 1-based.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges_1based);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Sorted list of 0-based edge pairs.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    bool adjacent(std::size_t i, std::size_t j) const; // 0-based
    /// Pairs (i, j), i < j, 0-based, that are not edges.
    std::vector<std::pair<std::size_t, std::size_t>> non_edges() const;

    Graph with_edge_removed(std::size_t i_1based, std::size_t j_1based) const;

    std::string description() const { return desc_.empty() ? "graph" : desc_; }
    Graph& set_description(std::string d) {
        desc_ = std::move(d);
        return *this;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::set<std::pair<std::size_t, std::size_t>> edge_set_;
    std::string desc_;
};

enum class GraphFamily { Path, Cycle, Wheel, Star, Complete, Empty };

/// Named families: path P_n (edges {i,i+1}), cycle C_n, wheel W_n (cycle on
/// n-1 plus a hub), star S_n (vertices 1..n-1 joined to n), complete K_n,
/// edgeless graph. Cycle requires n >= 3, wheel n >= 4, others n >= 1.
Graph family(GraphFamily kind, std::size_t n);
Graph family(const std::string& kind, std::size_t n);

Graph complement(const Graph& g);

/// Strong product: (a,x) ~ (b,y) iff (a = b or a~b) and (x = y or x~y),
/// excluding equal pairs. Vertex (a,x) maps to index (a-1)*n_h + x so that the
/// product's graph system is the Kronecker product of the factors' systems.
Graph strong_product(const Graph& g, const Graph& h);

/// Exact maximum clique size by branch and bound with a greedy coloring
/// bound. Caps at 30 vertices.
std::size_t clique_number(const Graph& g);

/// A maximum clique's vertex set (0-based), same algorithm.
std::vector<std::size_t> maximum_clique(const Graph& g);

/// alpha(g) = omega(complement(g)).
std::size_t independence_number(const Graph& g);

/// Edge-list text format: first line "n m", then m lines "i j" (1-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

/// Parses a graph spec: a named family "path:5", an edge-list file path, the
/// complement modifier "~spec", and the strong-product combinator "specxspec".
Graph parse_graph_spec(const std::string& spec);

} // namespace qpa
