#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dplab/graph.hpp"

namespace dplab {

struct PlaneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial embedding: rotations[v] lists the neighbors of v in cyclic
// order. Faces are derived purely from the rotation system.
struct PlaneGraph {
    Graph graph;
    std::vector<std::vector<Vertex>> rotations;
};

// Validates that each rotation is a permutation of the adjacency list.
PlaneGraph make_plane_graph(Graph g, std::vector<std::vector<Vertex>> rotations);

struct Face {
    std::vector<Vertex> boundary; // closed walk, one entry per dart
    int degree() const { return static_cast<int>(boundary.size()); }
};

// Face traversal: the dart (u,v) is followed by (v,w) where w succeeds u in
// rotations[v]. Requires a connected graph; checks sum d(f) = 2E and
// V - E + F = 2, throwing PlaneError otherwise.
std::vector<Face> trace_faces(const PlaneGraph& pg);

// Faces plus incidence lookup tables.
struct FaceIncidence {
    std::vector<Face> faces;
    std::vector<std::vector<int>> faces_at_vertex; // distinct, ascending
    // face_of_dart[dart index] where darts are ordered (u, position in rotations[u])
    std::vector<int> face_of_dart;
    std::vector<int> dart_offset; // per vertex offset into face_of_dart

    int face_on_dart(const PlaneGraph& pg, Vertex u, Vertex v) const;
};

FaceIncidence face_incidence(const PlaneGraph& pg);

// Rotation-system file {"n": int, "rotations": [[...], ...]}.
PlaneGraph read_rotation_system(const std::string& json_text);
std::string write_rotation_system(const PlaneGraph& pg);

} // namespace dplab
