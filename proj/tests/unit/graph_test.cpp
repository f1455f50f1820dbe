#include <doctest.h>

#include <random>

#include "dplab/config_match.hpp"
#include "dplab/graph.hpp"

using namespace dplab;

namespace {

// brute-force triangle oracle over all vertex triples
bool triangle_brute(const Graph& g) {
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = a + 1; b < g.n(); ++b)
            for (Vertex c = b + 1; c < g.n(); ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    return true;
    return false;
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({i + 5, 5 + (i + 2) % 5});
    }
    return Graph(10, es);
}

Graph cube() {
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (__builtin_popcount(i ^ j) == 1)
                es.push_back({i, j});
    return Graph(8, es);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> es;
    std::uniform_real_distribution<double> d(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d(rng) < p)
                es.push_back({i, j});
    return Graph(n, es);
}

} // namespace

TEST_CASE("build_graph basics") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);

    Graph single = build_graph(1, {});
    CHECK(single.n() == 1);
    CHECK(single.edge_count() == 0);

    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (Vertex v = 0; v < 4; ++v)
        CHECK(c4.degree(v) == 2);

    // duplicates collapse, orientation ignored
    Graph dup = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(2, {{-1, 0}}), GraphError);
}

TEST_CASE("edge list text round trip and errors") {
    Graph c4 = cycle_graph(4);
    Graph back = parse_edge_list(format_edge_list(c4));
    CHECK(back.edges() == c4.edges());
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list(""), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0\n"), GraphError);
}

TEST_CASE("has_triangle on named graphs") {
    CHECK_FALSE(has_triangle(cycle_graph(4)));
    Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(has_triangle(k4));
    CHECK_FALSE(has_triangle(petersen()));
}

TEST_CASE("has_triangle agrees with brute force on random graphs up to 8 vertices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.4, rng);
        CHECK(has_triangle(g) == triangle_brute(g));
    }
}

namespace {

// independent: collect all 4-cycles as edge sets and compare pairwise
bool nac4_brute(const Graph& g) {
    std::vector<std::vector<Edge>> cyc;
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = 0; b < g.n(); ++b)
            for (Vertex c = 0; c < g.n(); ++c)
                for (Vertex d = 0; d < g.n(); ++d) {
                    if (a >= b || a >= c || a >= d || b >= d)
                        continue; // canonical: a least, b < d
                    if (b == c || c == d)
                        continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                        g.has_edge(d, a)) {
                        std::vector<Edge> es = {{std::min(a, b), std::max(a, b)},
                                                {std::min(b, c), std::max(b, c)},
                                                {std::min(c, d), std::max(c, d)},
                                                {std::min(d, a), std::max(d, a)}};
                        std::sort(es.begin(), es.end());
                        cyc.push_back(es);
                    }
                }
    for (size_t i = 0; i < cyc.size(); ++i)
        for (size_t j = i + 1; j < cyc.size(); ++j) {
            std::vector<Edge> shared;
            std::set_intersection(cyc[i].begin(), cyc[i].end(), cyc[j].begin(), cyc[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() == 1)
                return true;
        }
    return false;
}

} // namespace

TEST_CASE("normally adjacent 4-cycles") {
    // two 4-cycles glued on one edge
    Graph glued = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 2}});
    auto w = find_normally_adjacent_c4(glued);
    REQUIRE(w.has_value());
    CHECK(w->shared_edge == Edge{1, 2});

    CHECK_FALSE(find_normally_adjacent_c4(cycle_graph(4)).has_value());

    // the cube: adjacent faces share exactly one edge, so a witness exists
    CHECK(nac4_brute(cube()));
    CHECK(find_normally_adjacent_c4(cube()).has_value());
}

TEST_CASE("normally adjacent 4-cycles agree with brute force on random graphs") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7); // up to 10
        Graph g = random_graph(n, 0.35, rng);
        CHECK(find_normally_adjacent_c4(g).has_value() == nac4_brute(g));
    }
}

TEST_CASE("induced subgraph") {
    Graph p4 = path_graph(4);
    auto sub = induced_subgraph(p4, {0, 1, 2});
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    auto all = induced_subgraph(p4, {0, 1, 2, 3});
    CHECK(all.graph.edges() == p4.edges());

    Graph c5 = cycle_graph(5);
    auto three = induced_subgraph(c5, {1, 2, 3});
    CHECK(three.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

namespace {

std::vector<std::vector<Vertex>> embeddings_brute(const Graph& host, const ConfigPattern& pat) {
    int k = pat.graph.n();
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> map(k, -1);
    std::vector<char> used(host.n(), 0);
    auto rec = [&](auto&& rec, int depth) -> void {
        if (depth == k) {
            out.push_back(map);
            return;
        }
        for (Vertex h = 0; h < host.n(); ++h) {
            if (used[h] || !pat.labels[depth].matches(host.degree(h)))
                continue;
            bool ok = true;
            for (int q = 0; q < depth; ++q)
                if (pat.graph.has_edge(depth, q) != host.has_edge(h, map[q]))
                    ok = false;
            if (!ok)
                continue;
            map[depth] = h;
            used[h] = 1;
            rec(rec, depth + 1);
            used[h] = 0;
            map[depth] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// realize a (3,3,3)-path: core path plus pendant leaves to pump degrees to 3
Graph path333_host() {
    // 0-1-2 core; pendants 3,4 on 0; 5 on 1; 6,7 on 2
    return build_graph(8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {2, 7}});
}

} // namespace

TEST_CASE("find_configuration basics") {
    ConfigPattern p333{path_graph(3), {{3, false}, {3, false}, {3, false}}};
    auto found = find_configuration(path333_host(), p333);
    CHECK(found.size() == 2); // the two orientations of the core path
    CHECK(found == embeddings_brute(path333_host(), p333));

    // K1,3 with center degree 4 cannot embed in C4
    ConfigPattern k13{star_graph(3), {{1, true}, {1, true}, {1, true}, {4, false}}};
    CHECK(find_configuration(cycle_graph(4), k13).empty());
}

TEST_CASE("find_configuration agrees with brute force on random hosts") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 120; ++trial) {
        int hn = 5 + static_cast<int>(rng() % 5); // up to 9
        Graph host = random_graph(hn, 0.35, rng);
        int pn = 2 + static_cast<int>(rng() % 4); // up to 5
        Graph pat_graph = random_graph(pn, 0.5, rng);
        ConfigPattern pat{pat_graph, {}};
        for (int v = 0; v < pn; ++v)
            pat.labels.push_back(DegreeLabel{static_cast<int>(rng() % 4) + 1, (rng() % 4) == 0});
        auto fast = find_configuration(host, pat);
        CHECK(fast == embeddings_brute(host, pat));
    }
}

TEST_CASE("degree label expansion") {
    ConfigPattern p{path_graph(2), {{4, true}, {3, false}}};
    auto expanded = expand_degree_labels(p, 6);
    REQUIRE(expanded.size() == 3); // 4, 5, 6+ variants
    CHECK(expanded[0].labels[0].value == 4);
    CHECK_FALSE(expanded[0].labels[0].at_least);
    CHECK(expanded[2].labels[0].value == 6);
    CHECK(expanded[2].labels[0].at_least);
}
