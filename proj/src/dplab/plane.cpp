#include "dplab/plane.hpp"

#include <algorithm>

#include <json.hpp>

namespace dplab {

PlaneGraph make_plane_graph(Graph g, std::vector<std::vector<Vertex>> rotations) {
    if (static_cast<int>(rotations.size()) != g.n())
        throw PlaneError("rotation count != vertex count");
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<Vertex> a = rotations[v];
        std::sort(a.begin(), a.end());
        if (a != g.neighbors(v))
            throw PlaneError("rotation at vertex " + std::to_string(v) +
                             " is not a permutation of its adjacency list");
    }
    return PlaneGraph{std::move(g), std::move(rotations)};
}

namespace {

// position of u within a rotation list
int find_pos(const std::vector<Vertex>& rot, Vertex u) {
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u)
            return static_cast<int>(i);
    return -1;
}

} // namespace

std::vector<Face> trace_faces(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (!is_connected(g))
        throw PlaneError("face tracing requires a connected graph");
    // dart id = offset[u] + position of v in rotations[u]
    std::vector<int> offset(g.n() + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v)
        offset[v + 1] = offset[v] + g.degree(v);
    int darts = offset[g.n()];
    auto dart_id = [&](Vertex u, Vertex v) {
        int p = find_pos(pg.rotations[u], v);
        if (p < 0)
            throw PlaneError("inconsistent rotation: missing dart");
        return offset[u] + p;
    };
    std::vector<char> used(darts, 0);
    std::vector<Face> faces;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (int p = 0; p < g.degree(u); ++p) {
            if (used[offset[u] + p])
                continue;
            Face f;
            Vertex cu = u;
            Vertex cv = pg.rotations[u][p];
            while (true) {
                int id = dart_id(cu, cv);
                if (used[id])
                    break;
                used[id] = 1;
                f.boundary.push_back(cu);
                // next dart: (cv, successor of cu in rotations[cv])
                int q = find_pos(pg.rotations[cv], cu);
                const auto& rot = pg.rotations[cv];
                Vertex nw = rot[(q + 1) % rot.size()];
                cu = cv;
                cv = nw;
            }
            faces.push_back(std::move(f));
        }
    }
    long long total_deg = 0;
    for (const auto& f : faces)
        total_deg += f.degree();
    if (total_deg != 2LL * g.edge_count())
        throw PlaneError("face degrees do not sum to 2E");
    long long euler = static_cast<long long>(g.n()) - g.edge_count() +
                      static_cast<long long>(faces.size());
    if (euler != 2)
        throw PlaneError("Euler check failed: V-E+F = " + std::to_string(euler) +
                         " (rotation system is not a planar embedding)");
    return faces;
}

FaceIncidence face_incidence(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    FaceIncidence fi;
    fi.faces = trace_faces(pg);
    fi.dart_offset.assign(g.n() + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v)
        fi.dart_offset[v + 1] = fi.dart_offset[v] + g.degree(v);
    fi.face_of_dart.assign(fi.dart_offset[g.n()], -1);
    // Re-trace to label darts; same deterministic order as trace_faces.
    std::vector<char> used(fi.face_of_dart.size(), 0);
    int face_id = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (int p = 0; p < g.degree(u); ++p) {
            if (used[fi.dart_offset[u] + p])
                continue;
            Vertex cu = u;
            Vertex cv = pg.rotations[u][p];
            while (true) {
                int q = find_pos(pg.rotations[cu], cv);
                int id = fi.dart_offset[cu] + q;
                if (used[id])
                    break;
                used[id] = 1;
                fi.face_of_dart[id] = face_id;
                int r = find_pos(pg.rotations[cv], cu);
                const auto& rot = pg.rotations[cv];
                Vertex nw = rot[(r + 1) % rot.size()];
                cu = cv;
                cv = nw;
            }
            ++face_id;
        }
    }
    fi.faces_at_vertex.assign(g.n(), {});
    for (int f = 0; f < static_cast<int>(fi.faces.size()); ++f)
        for (Vertex v : fi.faces[f].boundary)
            fi.faces_at_vertex[v].push_back(f);
    for (auto& lst : fi.faces_at_vertex) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return fi;
}

int FaceIncidence::face_on_dart(const PlaneGraph& pg, Vertex u, Vertex v) const {
    int p = find_pos(pg.rotations[u], v);
    if (p < 0)
        throw PlaneError("face_on_dart: no such dart");
    return face_of_dart[dart_offset[u] + p];
}

PlaneGraph read_rotation_system(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw PlaneError(std::string("rotation file: ") + e.what());
    }
    if (!doc.contains("n") || !doc.contains("rotations"))
        throw PlaneError("rotation file: missing \"n\" or \"rotations\"");
    int n = doc["n"].get<int>();
    std::vector<std::vector<Vertex>> rot = doc["rotations"].get<std::vector<std::vector<Vertex>>>();
    if (static_cast<int>(rot.size()) != n)
        throw PlaneError("rotation file: rotations size != n");
    std::vector<Edge> es;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : rot[v]) {
            if (w < 0 || w >= n)
                throw PlaneError("rotation file: neighbor out of range");
            if (v < w)
                es.emplace_back(v, w);
        }
    Graph g(n, es);
    return make_plane_graph(std::move(g), std::move(rot));
}

std::string write_rotation_system(const PlaneGraph& pg) {
    nlohmann::ordered_json doc;
    doc["n"] = pg.graph.n();
    doc["rotations"] = pg.rotations;
    return doc.dump(2) + "\n";
}

} // namespace dplab
