#pragma once

#include <vector>

#include "dplab/graph.hpp"

namespace dplab {

// Degree label of a configuration vertex: the degree the vertex must have in
// the host graph. at_least models k+ degree labels.
struct DegreeLabel {
    int value = 0;
    bool at_least = false;

    bool matches(int host_degree) const {
        return at_least ? host_degree >= value : host_degree == value;
    }
};

struct ConfigPattern {
    Graph graph;
    std::vector<DegreeLabel> labels; // one per pattern vertex
};

// All injective maps from the pattern into the host preserving induced
// adjacency (pattern non-edges must be host non-edges) and matching every
// vertex's labeled host degree. map[i] = host vertex of pattern vertex i.
std::vector<std::vector<Vertex>> find_configuration(const Graph& host, const ConfigPattern& pattern);

// Expand a pattern whose at_least labels should be replaced by exact values
// up to max_degree; a label of max_degree keeps at_least (treat-as-cap flag).
std::vector<ConfigPattern> expand_degree_labels(const ConfigPattern& pattern, int max_degree = 7);

} // namespace dplab
