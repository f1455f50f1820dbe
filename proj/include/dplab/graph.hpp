#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dplab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph. Vertices are 0..n-1, adjacency lists are sorted,
// edges are stored once as (u, v) with u < v in lexicographic order.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edge_list);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Vertex u, Vertex v) const;
    // Index into edges() for (u,v) in either orientation, -1 if absent.
    int edge_index(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

Graph build_graph(int n, const std::vector<Edge>& edge_list);

bool is_connected(const Graph& g);
bool has_triangle(const Graph& g);

// All 4-cycles, each as (a,b,c,d) with edges ab,bc,cd,da; canonical form:
// a is the smallest vertex and b < d.
std::vector<std::array<Vertex, 4>> four_cycles(const Graph& g);

struct NormallyAdjacentC4 {
    std::array<Vertex, 4> first;
    std::array<Vertex, 4> second;
    Edge shared_edge;
};

// Two 4-cycles sharing exactly one edge, if any pair exists.
std::optional<NormallyAdjacentC4> find_normally_adjacent_c4(const Graph& g);

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host; // to_host[new index] = host vertex
};

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs);

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph star_graph(int leaves); // leaves 0..k-1, center k

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

} // namespace dplab
