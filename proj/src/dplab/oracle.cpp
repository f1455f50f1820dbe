#include "dplab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "dplab/decide.hpp"

namespace dplab::oracle {

namespace {

// all saturating partial injections across one edge, by direct recursion
void edge_matchings(int fu, int fv, std::vector<EdgeMatching>& out) {
    out.clear();
    int k = std::min(fu, fv);
    std::vector<int> image;
    std::vector<char> used(std::max(fu, fv), 0);
    EdgeMatching cur;
    // choose, for each color of the smaller side in order, a distinct partner
    auto rec = [&](auto&& rec, int i) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        int big = std::max(fu, fv);
        for (int c = 0; c < big; ++c) {
            if (used[c])
                continue;
            used[c] = 1;
            if (fu <= fv)
                cur.pairs.emplace_back(i, c);
            else
                cur.pairs.emplace_back(c, i);
            rec(rec, i + 1);
            cur.pairs.pop_back();
            used[c] = 0;
        }
    };
    rec(rec, 0);
    for (auto& m : out)
        std::sort(m.pairs.begin(), m.pairs.end());
}

} // namespace

std::vector<Cover> raw_covers(const Graph& g, const QuotaMap& f) {
    std::vector<std::vector<EdgeMatching>> per_edge(g.edges().size());
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        edge_matchings(f[u], f[v], per_edge[e]);
    }
    std::vector<Cover> out;
    std::vector<EdgeMatching> cur(g.edges().size());
    auto rec = [&](auto&& rec, size_t e) -> void {
        if (e == per_edge.size()) {
            out.push_back(Cover{g, f, cur});
            return;
        }
        for (const auto& m : per_edge[e]) {
            cur[e] = m;
            rec(rec, e + 1);
        }
    };
    rec(rec, 0);
    return out;
}

uint64_t raw_cover_count(const Graph& g, const QuotaMap& f) {
    uint64_t total = 1;
    for (auto [u, v] : g.edges()) {
        int small = std::min(f[u], f[v]);
        int large = std::max(f[u], f[v]);
        uint64_t c = 1;
        for (int i = 0; i < small; ++i)
            c *= static_cast<uint64_t>(large - i);
        total *= c;
    }
    return total;
}

namespace {

bool place(const Cover& c, const QuotaMap& gq, std::vector<std::vector<int>>& chosen, Vertex v) {
    const Graph& g = c.base;
    if (v == g.n())
        return true;
    std::vector<int> pick;
    auto conflicts = [&](int color) {
        for (Vertex u : g.neighbors(v)) {
            if (u >= v)
                continue; // only earlier vertices are colored
            int e = g.edge_index(u, v);
            bool flip = g.edges()[e].first != u;
            for (auto [i, j] : c.matchings[e].pairs) {
                int cu = flip ? j : i;
                int cv = flip ? i : j;
                if (cv == color &&
                    std::find(chosen[u].begin(), chosen[u].end(), cu) != chosen[u].end())
                    return true;
            }
        }
        return false;
    };
    auto rec = [&](auto&& rec, int from, int left) -> bool {
        if (left == 0) {
            chosen[v] = pick;
            if (place(c, gq, chosen, v + 1))
                return true;
            chosen[v].clear();
            return false;
        }
        for (int color = from; color <= c.list_size[v] - left; ++color) {
            if (conflicts(color))
                continue;
            pick.push_back(color);
            if (rec(rec, color + 1, left - 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0, gq[v]);
}

} // namespace

bool naive_cover_colorable(const Cover& c, const QuotaMap& gq) {
    for (Vertex v = 0; v < c.base.n(); ++v)
        if (gq[v] > c.list_size[v])
            return false;
    std::vector<std::vector<int>> chosen(c.base.n());
    return place(c, gq, chosen, 0);
}

bool naive_is_dp_colorable(const Graph& g, const QuotaMap& f, const QuotaMap& gq) {
    std::vector<std::vector<EdgeMatching>> per_edge(g.edges().size());
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        edge_matchings(f[u], f[v], per_edge[e]);
    }
    std::vector<EdgeMatching> cur(g.edges().size());
    auto rec = [&](auto&& rec, size_t e) -> bool { // true iff every cover colorable
        if (e == per_edge.size()) {
            Cover c{g, f, cur};
            return naive_cover_colorable(c, gq);
        }
        for (const auto& m : per_edge[e]) {
            cur[e] = m;
            if (!rec(rec, e + 1))
                return false;
        }
        return true;
    };
    return rec(rec, 0);
}

std::vector<Graph> small_connected_graphs(int max_n) {
    std::vector<Graph> out;
    auto add = [&](int n, std::vector<Edge> es) { out.push_back(Graph(n, std::move(es))); };
    if (max_n >= 1)
        add(1, {});
    if (max_n >= 2)
        add(2, {{0, 1}});
    if (max_n >= 3) {
        add(3, {{0, 1}, {1, 2}});            // P3
        add(3, {{0, 1}, {1, 2}, {0, 2}});    // C3
    }
    if (max_n >= 4) {
        add(4, {{0, 1}, {1, 2}, {2, 3}});                         // P4
        add(4, {{0, 3}, {1, 3}, {2, 3}});                         // K1,3
        add(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});                 // C4
        add(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});                 // paw
        add(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});         // diamond
        add(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); // K4
    }
    return out;
}

SweepResult cross_check_small_graphs(int max_n, int max_f, int workers) {
    auto graphs = small_connected_graphs(max_n);
    // one work item per (graph, f); g-maps enumerated inside
    struct Item {
        const Graph* g;
        QuotaMap f;
        int graph_idx;
    };
    std::vector<Item> items;
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        QuotaMap f(g.n(), 0);
        while (true) {
            items.push_back(Item{&g, f, static_cast<int>(gi)});
            int k = 0;
            while (k < g.n() && f[k] == max_f)
                f[k++] = 0;
            if (k == g.n())
                break;
            ++f[k];
        }
    }
    SweepResult result;
    std::mutex mu;
    std::atomic<size_t> next{0};
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? static_cast<int>(std::min(hw, 8u)) : 1;
    }
    auto work = [&]() {
        uint64_t local_count = 0;
        std::vector<SweepMismatch> local_mis;
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= items.size())
                break;
            const Item& item = items[idx];
            const Graph& g = *item.g;
            QuotaMap gq(g.n(), 0);
            while (true) {
                bool ok = true;
                for (int v = 0; v < g.n(); ++v)
                    if (gq[v] > item.f[v])
                        ok = false;
                if (ok) {
                    ++local_count;
                    bool naive = naive_is_dp_colorable(g, item.f, gq);
                    DecideOptions opts;
                    opts.workers = 1;
                    Verdict smart = is_dp_colorable(g, item.f, gq, opts);
                    if (smart.answer() != naive) {
                        std::string d = "graph#" + std::to_string(item.graph_idx) + " f=";
                        for (int x : item.f)
                            d += std::to_string(x);
                        d += " g=";
                        for (int x : gq)
                            d += std::to_string(x);
                        d += " naive=" + std::string(naive ? "true" : "false") +
                             " normalized=" + std::string(smart.answer() ? "true" : "false");
                        local_mis.push_back({d});
                    }
                }
                int k = 0;
                while (k < g.n() && gq[k] == item.f[k])
                    gq[k++] = 0;
                if (k == g.n())
                    break;
                ++gq[k];
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        result.instances += local_count;
        for (auto& m : local_mis)
            result.mismatches.push_back(std::move(m));
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    std::sort(result.mismatches.begin(), result.mismatches.end(),
              [](const SweepMismatch& a, const SweepMismatch& b) {
                  return a.description < b.description;
              });
    return result;
}

} // namespace dplab::oracle
