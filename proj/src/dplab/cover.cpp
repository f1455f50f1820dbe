#include "dplab/cover.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

namespace dplab {

const EdgeMatching& Cover::matching(Vertex u, Vertex v) const {
    int idx = base.edge_index(u, v);
    if (idx < 0)
        throw CoverError("no matching: not a base edge");
    return matchings[idx];
}

bool covers_equal(const Cover& a, const Cover& b) {
    if (a.base.n() != b.base.n() || a.base.edges() != b.base.edges())
        return false;
    if (a.list_size != b.list_size)
        return false;
    for (size_t e = 0; e < a.matchings.size(); ++e)
        if (a.matchings[e].pairs != b.matchings[e].pairs)
            return false;
    return true;
}

Cover make_cover(const Graph& g, const QuotaMap& f, std::vector<EdgeMatching> matchings,
                 bool strict_saturation) {
    if (static_cast<int>(f.size()) != g.n())
        throw CoverError("list size map must cover every vertex");
    for (int x : f)
        if (x < 0)
            throw CoverError("negative list size");
    if (matchings.size() != g.edges().size())
        throw CoverError("matching count != edge count");
    for (size_t e = 0; e < matchings.size(); ++e) {
        auto [u, v] = g.edges()[e];
        auto& pairs = matchings[e].pairs;
        std::sort(pairs.begin(), pairs.end());
        std::vector<char> seen_i(f[u], 0), seen_j(f[v], 0);
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= f[u] || j < 0 || j >= f[v])
                throw CoverError("matching index out of range on edge (" + std::to_string(u) +
                                 "," + std::to_string(v) + ")");
            if (seen_i[i]++)
                throw CoverError("repeated left index " + std::to_string(i) + " on edge (" +
                                 std::to_string(u) + "," + std::to_string(v) + ")");
            if (seen_j[j]++)
                throw CoverError("repeated right index " + std::to_string(j) + " on edge (" +
                                 std::to_string(u) + "," + std::to_string(v) + ")");
        }
        if (strict_saturation &&
            static_cast<int>(pairs.size()) != std::min(f[u], f[v]))
            throw CoverError("matching on edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") does not saturate the smaller list");
    }
    return Cover{g, f, std::move(matchings)};
}

Cover identity_cover(const Graph& g, const QuotaMap& f) {
    std::vector<EdgeMatching> ms(g.edges().size());
    for (size_t e = 0; e < ms.size(); ++e) {
        auto [u, v] = g.edges()[e];
        int k = std::min(f[u], f[v]);
        for (int i = 0; i < k; ++i)
            ms[e].pairs.emplace_back(i, i);
    }
    return make_cover(g, f, std::move(ms));
}

ListCover from_list_assignment(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.n())
        throw CoverError("list assignment must cover every vertex");
    QuotaMap f(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        auto sorted = lists[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw CoverError("duplicate color in list of vertex " + std::to_string(v));
        f[v] = static_cast<int>(lists[v].size());
    }
    std::vector<EdgeMatching> ms(g.edges().size());
    for (size_t e = 0; e < ms.size(); ++e) {
        auto [u, v] = g.edges()[e];
        for (int i = 0; i < f[u]; ++i)
            for (int j = 0; j < f[v]; ++j)
                if (lists[u][i] == lists[v][j])
                    ms[e].pairs.emplace_back(i, j);
    }
    return ListCover{make_cover(g, f, std::move(ms), /*strict_saturation=*/false), lists};
}

namespace {

struct BfsTree {
    std::vector<int> parent; // -1 for root / unreached
    std::vector<Vertex> order;
};

BfsTree bfs_tree(const Graph& g) {
    BfsTree t;
    t.parent.assign(g.n(), -2);
    std::queue<Vertex> q;
    q.push(0);
    t.parent[0] = -1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        t.order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (t.parent[w] == -2) {
                t.parent[w] = v;
                q.push(w);
            }
        }
    }
    return t;
}

} // namespace

Cover normalize(const Cover& c) {
    const Graph& g = c.base;
    if (!is_connected(g))
        throw CoverError("normalize requires a connected base graph");
    BfsTree tree = bfs_tree(g);
    // relabel[v][old index] = new index
    std::vector<std::vector<int>> relabel(g.n());
    for (Vertex v : tree.order) {
        int fv = c.list_size[v];
        relabel[v].assign(fv, -1);
        if (tree.parent[v] < 0) {
            for (int i = 0; i < fv; ++i)
                relabel[v][i] = i;
            continue;
        }
        Vertex u = tree.parent[v];
        auto [a, b] = std::pair(std::min(u, v), std::max(u, v));
        const auto& pairs = c.matchings[g.edge_index(a, b)].pairs;
        // matched v-colors ordered by their partner's new label in u
        std::vector<std::pair<int, int>> by_parent; // (new u label, old v color)
        for (auto [i, j] : pairs) {
            int uc = (u == a) ? i : j;
            int vc = (u == a) ? j : i;
            by_parent.emplace_back(relabel[u][uc], vc);
        }
        std::sort(by_parent.begin(), by_parent.end());
        int next = 0;
        for (auto [_, vc] : by_parent)
            relabel[v][vc] = next++;
        for (int old = 0; old < fv; ++old)
            if (relabel[v][old] < 0)
                relabel[v][old] = next++;
    }
    std::vector<EdgeMatching> ms(g.edges().size());
    for (size_t e = 0; e < ms.size(); ++e) {
        auto [a, b] = g.edges()[e];
        for (auto [i, j] : c.matchings[e].pairs)
            ms[e].pairs.emplace_back(relabel[a][i], relabel[b][j]);
        std::sort(ms[e].pairs.begin(), ms[e].pairs.end());
    }
    return Cover{g, c.list_size, std::move(ms)};
}

DeletionResult delete_closed_neighborhood(const Cover& c, std::vector<HVertex> s) {
    const Graph& g = c.base;
    std::vector<std::vector<char>> removed(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        removed[v].assign(c.list_size[v], 0);
    for (auto [v, i] : s) {
        if (v < 0 || v >= g.n() || i < 0 || i >= c.list_size[v])
            throw CoverError("delete_closed_neighborhood: H-vertex out of range");
        removed[v][i] = 1;
    }
    // matched partners of the deleted set (one hop)
    for (size_t e = 0; e < c.matchings.size(); ++e) {
        auto [a, b] = g.edges()[e];
        for (auto [i, j] : c.matchings[e].pairs) {
            bool da = false, db = false;
            for (auto [v, k] : s) {
                if (v == a && k == i)
                    da = true;
                if (v == b && k == j)
                    db = true;
            }
            if (da)
                removed[b][j] = 1;
            if (db)
                removed[a][i] = 1;
        }
    }
    DeletionResult out;
    out.old_color.assign(g.n(), {});
    QuotaMap f2(g.n(), 0);
    std::vector<std::vector<int>> new_of_old(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        new_of_old[v].assign(c.list_size[v], -1);
        for (int i = 0; i < c.list_size[v]; ++i) {
            if (!removed[v][i]) {
                new_of_old[v][i] = f2[v]++;
                out.old_color[v].push_back(i);
            }
        }
    }
    std::vector<EdgeMatching> ms(g.edges().size());
    for (size_t e = 0; e < ms.size(); ++e) {
        auto [a, b] = g.edges()[e];
        for (auto [i, j] : c.matchings[e].pairs)
            if (new_of_old[a][i] >= 0 && new_of_old[b][j] >= 0)
                ms[e].pairs.emplace_back(new_of_old[a][i], new_of_old[b][j]);
        std::sort(ms[e].pairs.begin(), ms[e].pairs.end());
    }
    out.new_list_size = f2;
    out.cover = Cover{g, std::move(f2), std::move(ms)};
    return out;
}

std::string write_cover(const Cover& c) {
    nlohmann::ordered_json doc;
    doc["f"] = c.list_size;
    auto& ms = doc["matchings"] = nlohmann::ordered_json::array();
    for (size_t e = 0; e < c.matchings.size(); ++e) {
        auto [u, v] = c.base.edges()[e];
        nlohmann::ordered_json m;
        m["edge"] = {u, v};
        auto& ps = m["pairs"] = nlohmann::ordered_json::array();
        for (auto [i, j] : c.matchings[e].pairs)
            ps.push_back({i, j});
        ms.push_back(std::move(m));
    }
    return doc.dump(2) + "\n";
}

Cover read_cover(const Graph& g, const std::string& json_text, bool strict_saturation) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw CoverError(std::string("cover file: ") + e.what());
    }
    if (!doc.contains("f") || !doc.contains("matchings"))
        throw CoverError("cover file: missing \"f\" or \"matchings\"");
    QuotaMap f = doc["f"].get<QuotaMap>();
    std::vector<EdgeMatching> ms(g.edges().size());
    std::vector<char> seen(g.edges().size(), 0);
    for (const auto& m : doc["matchings"]) {
        auto ev = m.at("edge").get<std::vector<int>>();
        if (ev.size() != 2)
            throw CoverError("cover file: edge must have two endpoints");
        int idx = g.edge_index(ev[0], ev[1]);
        if (idx < 0)
            throw CoverError("cover file: (" + std::to_string(ev[0]) + "," +
                             std::to_string(ev[1]) + ") is not a base edge");
        if (seen[idx]++)
            throw CoverError("cover file: duplicate matching for one edge");
        bool flip = ev[0] > ev[1];
        for (const auto& p : m.at("pairs")) {
            auto pv = p.get<std::vector<int>>();
            if (pv.size() != 2)
                throw CoverError("cover file: pair must have two indices");
            if (flip)
                std::swap(pv[0], pv[1]);
            ms[idx].pairs.emplace_back(pv[0], pv[1]);
        }
    }
    for (char s : seen)
        if (!s)
            throw CoverError("cover file: missing matching for some base edge");
    return make_cover(g, f, std::move(ms), strict_saturation);
}

} // namespace dplab
