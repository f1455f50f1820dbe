#include "dplab/graph.hpp"

#include <algorithm>
#include <sstream>

namespace dplab {

Graph::Graph(int n, const std::vector<Edge>& edge_list) : n_(n), adj_(n) {
    if (n < 0)
        throw GraphError("vertex count must be nonnegative");
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw GraphError("loop edge at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int n, const std::vector<Edge>& edge_list) {
    return Graph(n, edge_list);
}

bool is_connected(const Graph& g) {
    if (g.n() == 0)
        return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n();
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j])
                return true;
            if (a[i] < b[j])
                ++i;
            else
                ++j;
        }
    }
    return false;
}

std::vector<std::array<Vertex, 4>> four_cycles(const Graph& g) {
    std::vector<std::array<Vertex, 4>> out;
    // a-b-c-d-a with a minimal and b < d; scan common neighbors of the
    // diagonal (a,c). Quadratic in n per pair, fine for the small inputs here.
    for (Vertex a = 0; a < g.n(); ++a) {
        for (Vertex c = a + 1; c < g.n(); ++c) {
            std::vector<Vertex> common;
            for (Vertex w : g.neighbors(a))
                if (w > a && g.has_edge(c, w) && w != c)
                    common.push_back(w);
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    out.push_back({a, common[i], c, common[j]});
        }
    }
    return out;
}

namespace {

std::vector<Edge> cycle_edges(const std::array<Vertex, 4>& c) {
    std::vector<Edge> es;
    for (int i = 0; i < 4; ++i) {
        Vertex u = c[i], v = c[(i + 1) % 4];
        if (u > v)
            std::swap(u, v);
        es.emplace_back(u, v);
    }
    std::sort(es.begin(), es.end());
    return es;
}

} // namespace

std::optional<NormallyAdjacentC4> find_normally_adjacent_c4(const Graph& g) {
    auto cycles = four_cycles(g);
    std::vector<std::vector<Edge>> edge_sets;
    edge_sets.reserve(cycles.size());
    for (const auto& c : cycles)
        edge_sets.push_back(cycle_edges(c));
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            std::vector<Edge> shared;
            std::set_intersection(edge_sets[i].begin(), edge_sets[i].end(),
                                  edge_sets[j].begin(), edge_sets[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() == 1)
                return NormallyAdjacentC4{cycles[i], cycles[j], shared[0]};
        }
    }
    return std::nullopt;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted)
        if (v < 0 || v >= g.n())
            throw GraphError("induced_subgraph: vertex out of range");
    std::vector<int> index(g.n(), -1);
    for (size_t i = 0; i < sorted.size(); ++i)
        index[sorted[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            es.emplace_back(index[u], index[v]);
    return Subgraph{Graph(static_cast<int>(sorted.size()), es), sorted};
}

Graph path_graph(int k) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i)
        es.emplace_back(i, i + 1);
    return Graph(k, es);
}

Graph cycle_graph(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        es.emplace_back(i, (i + 1) % k);
    return Graph(k, es);
}

Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 0; i < leaves; ++i)
        es.emplace_back(i, leaves);
    return Graph(leaves + 1, es);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> es;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m))
                continue; // skip leading blank lines
            if (n < 0 || m < 0)
                throw GraphError("line " + std::to_string(lineno) + ": bad header");
            continue;
        }
        int u, v;
        if (!(ls >> u)) // blank line
            continue;
        if (!(ls >> v))
            throw GraphError("line " + std::to_string(lineno) + ": expected \"u v\"");
        es.emplace_back(u, v);
    }
    if (n < 0)
        throw GraphError("missing \"n m\" header line");
    if (static_cast<int>(es.size()) != m)
        throw GraphError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(es.size()));
    try {
        return Graph(n, es);
    } catch (const GraphError& e) {
        throw GraphError(std::string("edge list: ") + e.what());
    }
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace dplab
