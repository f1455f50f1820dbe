#include "patch.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dplab::test {

PlaneGraph plane_from_inner_faces(int n, const std::vector<std::vector<Vertex>>& inner_faces,
                                  const std::vector<Edge>& extra_edges) {
    // wedge successor at v: after neighbor a comes neighbor b when some face
    // boundary passes a, v, b
    std::vector<std::map<Vertex, Vertex>> succ(n);
    std::set<Edge> edge_set;
    for (const auto& face : inner_faces) {
        size_t k = face.size();
        for (size_t i = 0; i < k; ++i) {
            Vertex prev = face[(i + k - 1) % k];
            Vertex v = face[i];
            Vertex next = face[(i + 1) % k];
            auto [it, fresh] = succ[v].emplace(prev, next);
            if (!fresh)
                throw PlaneError("face list reuses a dart: faces overlap");
            edge_set.insert({std::min(v, next), std::max(v, next)});
        }
    }
    for (auto [u, v] : extra_edges)
        edge_set.insert({std::min(u, v), std::max(u, v)});

    std::vector<std::vector<Vertex>> rotations(n);
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> nbrs;
        for (auto [a, b] : edge_set) {
            if (a == v)
                nbrs.insert(b);
            if (b == v)
                nbrs.insert(a);
        }
        std::set<Vertex> extra_here;
        for (auto [a, b] : extra_edges) {
            if (a == v)
                extra_here.insert(b);
            if (b == v)
                extra_here.insert(a);
        }
        // chain the wedges: starts are neighbors with no incoming successor
        std::set<Vertex> has_incoming;
        for (auto [a, b] : succ[v])
            has_incoming.insert(b);
        std::vector<Vertex> rot;
        std::set<Vertex> seen;
        auto follow = [&](Vertex start) {
            Vertex cur = start;
            while (true) {
                if (seen.count(cur))
                    break;
                seen.insert(cur);
                rot.push_back(cur);
                auto it = succ[v].find(cur);
                if (it == succ[v].end())
                    break;
                cur = it->second;
            }
        };
        for (Vertex w : nbrs) {
            if (extra_here.count(w))
                continue;
            if (succ[v].count(w) && has_incoming.count(w))
                continue; // interior of a chain or cycle
            if (!seen.count(w) && (succ[v].count(w) || has_incoming.count(w)) &&
                !has_incoming.count(w))
                follow(w);
        }
        // cycles (interior vertices) start anywhere deterministic
        for (Vertex w : nbrs)
            if (!seen.count(w) && !extra_here.count(w))
                follow(w);
        for (Vertex w : extra_here)
            if (!seen.count(w))
                rot.push_back(w);
        rotations[v] = std::move(rot);
    }
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    Graph g(n, edges);
    PlaneGraph pg = make_plane_graph(std::move(g), std::move(rotations));
    // the face tracer validates the Euler relation; also demand the declared
    // inner face count plus exactly one outer face
    auto faces = trace_faces(pg);
    if (faces.size() != inner_faces.size() + 1)
        throw PlaneError("face list did not embed as declared");
    return pg;
}

PlaneGraph hex_chain(int h) {
    // top row 0..2h, bottom row 2h+1..4h+1
    std::vector<std::vector<Vertex>> faces;
    auto bot = [&](int i) { return 2 * h + 1 + i; };
    for (int k = 0; k < h; ++k)
        faces.push_back({2 * k, 2 * k + 1, 2 * k + 2, bot(2 * k + 2), bot(2 * k + 1), bot(2 * k)});
    return plane_from_inner_faces(4 * h + 2, faces);
}

PlaneGraph hex_chain_with_pendants(int h, const std::vector<int>& pendant_at) {
    std::vector<std::vector<Vertex>> faces;
    auto bot = [&](int i) { return 2 * h + 1 + i; };
    for (int k = 0; k < h; ++k)
        faces.push_back({2 * k, 2 * k + 1, 2 * k + 2, bot(2 * k + 2), bot(2 * k + 1), bot(2 * k)});
    int n = 4 * h + 2;
    std::vector<Edge> extra;
    for (int at : pendant_at)
        extra.push_back({at, n++});
    return plane_from_inner_faces(n, faces, extra);
}

PlaneGraph theta_graph(int a, int b, int c) {
    // junctions 0 and 1; arms laid out as inner faces (arm1|arm2), (arm2|arm3)
    int n = 2 + a + b + c;
    auto arm = [&](int offset, int len) {
        std::vector<Vertex> path{0};
        for (int i = 0; i < len; ++i)
            path.push_back(2 + offset + i);
        path.push_back(1);
        return path;
    };
    auto p1 = arm(0, a), p2 = arm(a, b), p3 = arm(a + b, c);
    std::vector<std::vector<Vertex>> faces;
    // face between arm1 and arm2: walk arm1 forward, arm2 backward
    auto face_between = [](const std::vector<Vertex>& f, const std::vector<Vertex>& s) {
        std::vector<Vertex> out(f.begin(), f.end() - 1);
        for (size_t i = s.size() - 1; i >= 1; --i)
            out.push_back(s[i]);
        return out;
    };
    faces.push_back(face_between(p1, p2));
    faces.push_back(face_between(p2, p3));
    return plane_from_inner_faces(n, faces);
}

PlaneGraph cycle_plane(int k) {
    std::vector<Vertex> face(k);
    for (int i = 0; i < k; ++i)
        face[i] = i;
    return plane_from_inner_faces(k, {face});
}

PlaneGraph cube_plane() {
    // bottom 0..3, top 4..7; five inner faces, the sixth is outer
    std::vector<std::vector<Vertex>> faces = {
        {0, 1, 2, 3},
        {0, 4, 5, 1},
        {1, 5, 6, 2},
        {2, 6, 7, 3},
        {3, 7, 4, 0},
    };
    return plane_from_inner_faces(8, faces);
}

PlaneGraph random_tree_plane(int n, std::mt19937_64& rng) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> d(0, v - 1);
        es.push_back({d(rng), v});
    }
    Graph g(n, es);
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex v = 0; v < n; ++v)
        rot[v] = g.neighbors(v);
    return make_plane_graph(std::move(g), std::move(rot));
}

std::vector<PlaneGraph> discharge_corpus(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PlaneGraph> out;
    out.push_back(cube_plane());
    for (int k = 4; k <= 12 && static_cast<int>(out.size()) < count; ++k)
        out.push_back(cycle_plane(k));
    for (int h = 1; h <= 7 && static_cast<int>(out.size()) < count; ++h)
        out.push_back(hex_chain(h));
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 4 && static_cast<int>(out.size()) < count; ++b)
            out.push_back(theta_graph(a, b, 4));
    while (static_cast<int>(out.size()) < count) {
        switch (rng() % 3) {
        case 0:
            out.push_back(random_tree_plane(5 + static_cast<int>(rng() % 20), rng));
            break;
        case 1: {
            int h = 1 + static_cast<int>(rng() % 6);
            std::vector<int> pendants;
            int k = static_cast<int>(rng() % 4);
            for (int i = 0; i < k; ++i)
                pendants.push_back(static_cast<int>(rng() % (2 * h + 1)));
            std::sort(pendants.begin(), pendants.end());
            pendants.erase(std::unique(pendants.begin(), pendants.end()), pendants.end());
            out.push_back(hex_chain_with_pendants(h, pendants));
            break;
        }
        default:
            out.push_back(theta_graph(2 + rng() % 3, 2 + rng() % 3, 2 + rng() % 3));
        }
    }
    return out;
}

std::vector<Graph> class_member_corpus(int count, int max_n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.push_back(cycle_graph(4));
    out.push_back(cycle_graph(5));
    out.push_back(cycle_graph(7));
    while (static_cast<int>(out.size()) < count) {
        Graph g;
        switch (rng() % 4) {
        case 0: {
            int h = 1 + static_cast<int>(rng() % ((max_n - 2) / 4));
            std::vector<int> pendants;
            int k = static_cast<int>(rng() % 3);
            for (int i = 0; i < k && 4 * h + 2 + i < max_n; ++i)
                pendants.push_back(static_cast<int>(rng() % (2 * h + 1)));
            std::sort(pendants.begin(), pendants.end());
            pendants.erase(std::unique(pendants.begin(), pendants.end()), pendants.end());
            g = hex_chain_with_pendants(h, pendants).graph;
            break;
        }
        case 1: {
            int n = 4 + static_cast<int>(rng() % (max_n - 4));
            std::vector<Edge> es;
            for (int v = 1; v < n; ++v)
                es.push_back({static_cast<int>(rng() % v), v});
            g = Graph(n, es);
            break;
        }
        case 2: {
            int a = 2 + static_cast<int>(rng() % 4);
            int b = 2 + static_cast<int>(rng() % 4);
            int c = 2 + static_cast<int>(rng() % 4);
            g = theta_graph(a, b, c).graph;
            break;
        }
        default:
            g = cycle_graph(4 + static_cast<int>(rng() % (max_n - 4)));
        }
        if (g.n() <= max_n && !has_triangle(g) && !find_normally_adjacent_c4(g))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace dplab::test
