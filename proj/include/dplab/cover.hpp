#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dplab/graph.hpp"
#include "dplab/quota.hpp"

namespace dplab {

struct CoverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matching across one base edge (u,v) with u < v: pair (i,j) joins color i of
// u to color j of v. A partial injection: no repeated i, no repeated j.
struct EdgeMatching {
    std::vector<std::pair<int, int>> pairs; // sorted by first component
};

// The (L,H) of DP-coloring with each list identified with {0..f(v)-1} and the
// cross-edges of H stored as one partial injection per base edge.
struct Cover {
    Graph base;
    QuotaMap list_size;                  // f
    std::vector<EdgeMatching> matchings; // parallel to base.edges()

    const EdgeMatching& matching(Vertex u, Vertex v) const;
};

bool covers_equal(const Cover& a, const Cover& b);

// Validates ranges and injectivity; with strict_saturation also requires
// |matching| == min(f(u), f(v)) on every edge (convention 1).
Cover make_cover(const Graph& g, const QuotaMap& f, std::vector<EdgeMatching> matchings,
                 bool strict_saturation = true);

// Matching {(i,i) : i < min(f(u), f(v))} on every edge.
Cover identity_cover(const Graph& g, const QuotaMap& f);

struct ListCover {
    Cover cover;
    std::vector<std::vector<int>> colors; // colors[v][i] = abstract color of index i
};

// Embed a list assignment: colors connect exactly where they coincide. The
// result may violate saturation, so strict mode is off.
ListCover from_list_assignment(const Graph& g, const std::vector<std::vector<int>>& lists);

// Canonical form under per-list relabeling, over a BFS tree rooted at vertex
// 0 (children in neighbor order): a tree edge toward a child with the larger
// or equal list carries the identity pattern {(i,i)}; toward a smaller child
// it carries {(s_k, k)} with the matched parent colors s_0 < s_1 < ... Non-
// tree matchings are rewritten by the same relabeling.
Cover normalize(const Cover& c);

struct HVertex {
    Vertex v;
    int color;
    bool operator==(const HVertex&) const = default;
    bool operator<(const HVertex& o) const { return std::pair(v, color) < std::pair(o.v, o.color); }
};

struct DeletionResult {
    Cover cover;
    QuotaMap new_list_size;
    std::vector<std::vector<int>> old_color; // old_color[v][new index] = old index
};

// Delete the given H-vertices together with their matched partners; the
// remaining lists are reindexed densely. Saturation is not enforced on the
// result (convention 3 covers arising from surgery).
DeletionResult delete_closed_neighborhood(const Cover& c, std::vector<HVertex> s);

// Cover file {"f": [...], "matchings": [{"edge": [u,v], "pairs": [[i,j],...]},...]}.
std::string write_cover(const Cover& c);
Cover read_cover(const Graph& g, const std::string& json_text, bool strict_saturation = false);

} // namespace dplab
