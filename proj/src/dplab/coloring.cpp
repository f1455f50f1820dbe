#include "dplab/coloring.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

namespace dplab {

std::vector<std::vector<int>> MultiColoring::to_lists() const {
    std::vector<std::vector<int>> out(chosen.size());
    for (size_t v = 0; v < chosen.size(); ++v)
        for (int c = 0; c < kMaxColors; ++c)
            if (chosen[v] >> c & 1u)
                out[v].push_back(c);
    return out;
}

CoverSolver::CoverSolver(const Graph& g) : g_(&g) {
    nbr_off_.assign(g.n() + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v)
        nbr_off_[v + 1] = nbr_off_[v] + g.degree(v);
    nbr_flat_.reserve(nbr_off_[g.n()]);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            nbr_flat_.push_back(w);
    partner_.resize(nbr_off_[g.n()]);
}

void CoverSolver::load(const Cover& c) {
    f_ = c.list_size;
    for (auto& p : partner_)
        p.fill(-1);
    const Graph& g = *g_;
    auto dart = [&](Vertex v, Vertex w) {
        const auto& nb = g.neighbors(v);
        int k = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
        return nbr_off_[v] + k;
    };
    for (size_t e = 0; e < c.matchings.size(); ++e) {
        auto [a, b] = g.edges()[e];
        int dab = dart(a, b), dba = dart(b, a);
        for (auto [i, j] : c.matchings[e].pairs) {
            partner_[dab][i] = static_cast<int8_t>(j);
            partner_[dba][j] = static_cast<int8_t>(i);
        }
    }
}

struct CoverSolver::State {
    std::vector<uint32_t> avail;
    std::vector<uint32_t> chosen;
    std::vector<int> need;
    std::vector<uint8_t> done;
    int remaining = 0;
    uint64_t nodes = 0;
    bool capped = false;
};

bool CoverSolver::dfs(State& st, const SolveLimits& lim) {
    if (st.remaining == 0)
        return true;
    const Graph& g = *g_;
    // most constrained vertex: maximize need/avail, ties to the smaller index
    int best = -1;
    long long bn = -1, ba = 1;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (st.done[v])
            continue;
        long long a = std::popcount(st.avail[v]);
        if (a < st.need[v])
            return false;
        if (best < 0 || static_cast<long long>(st.need[v]) * ba > bn * a) {
            best = v;
            bn = st.need[v];
            ba = a;
        }
    }
    Vertex v = best;
    int k = st.need[v];
    int bits[kMaxColors];
    int bc = 0;
    for (uint32_t m = st.avail[v]; m; m &= m - 1)
        bits[bc++] = std::countr_zero(m);
    // combinations of k of the bc available colors, lexicographic
    int idx[kMaxColors];
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    std::vector<std::pair<Vertex, uint32_t>> undo;
    while (true) {
        ++st.nodes;
        if (st.nodes > lim.max_nodes) {
            st.capped = true;
            return false;
        }
        uint32_t mask = 0;
        for (int i = 0; i < k; ++i)
            mask |= 1u << bits[idx[i]];
        // forward check neighbors
        undo.clear();
        bool ok = true;
        for (int s = nbr_off_[v]; s < nbr_off_[v + 1]; ++s) {
            Vertex w = nbr_flat_[s];
            if (st.done[w])
                continue;
            uint32_t block = 0;
            const auto& pt = partner_[s];
            for (uint32_t m = mask; m; m &= m - 1) {
                int pc = pt[std::countr_zero(m)];
                if (pc >= 0)
                    block |= 1u << pc;
            }
            uint32_t na = st.avail[w] & ~block;
            if (na != st.avail[w]) {
                undo.emplace_back(w, st.avail[w]);
                st.avail[w] = na;
                if (std::popcount(na) < st.need[w]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            st.chosen[v] = mask;
            st.done[v] = 1;
            --st.remaining;
            if (dfs(st, lim))
                return true;
            if (st.capped)
                return false;
            st.done[v] = 0;
            ++st.remaining;
            st.chosen[v] = 0;
        }
        for (auto [w, old] : undo)
            st.avail[w] = old;
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == bc - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return false;
}

SolveResult CoverSolver::solve(const QuotaMap& need, const SolveLimits& lim) {
    std::vector<uint32_t> pre(g_->n(), 0);
    std::vector<uint8_t> fixed(g_->n(), 0);
    return complete(need, pre, fixed, lim);
}

SolveResult CoverSolver::complete(const QuotaMap& need, const std::vector<uint32_t>& pre,
                                  const std::vector<uint8_t>& fixed, const SolveLimits& lim) {
    const Graph& g = *g_;
    if (static_cast<int>(need.size()) != g.n())
        throw CoverError("quota map must cover every vertex");
    State st;
    st.avail.resize(g.n());
    st.chosen.assign(g.n(), 0);
    st.need.assign(g.n(), 0);
    st.done.assign(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (f_[v] > kMaxColors)
            throw CoverError("list size exceeds color capacity");
        if (!fixed[v] && need[v] > f_[v])
            throw CoverError("quota exceeds list size at vertex " + std::to_string(v));
        st.avail[v] = (f_[v] >= 32) ? ~0u : ((1u << f_[v]) - 1);
        if (fixed[v]) {
            st.chosen[v] = pre[v];
            st.done[v] = 1;
        } else {
            st.need[v] = need[v];
            if (need[v] == 0)
                st.done[v] = 1;
            else
                ++st.remaining;
        }
    }
    // propagate blocks from fixed vertices
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!fixed[v] || st.chosen[v] == 0)
            continue;
        for (int s = nbr_off_[v]; s < nbr_off_[v + 1]; ++s) {
            Vertex w = nbr_flat_[s];
            if (st.done[w])
                continue;
            uint32_t block = 0;
            const auto& pt = partner_[s];
            for (uint32_t m = st.chosen[v]; m; m &= m - 1) {
                int pc = pt[std::countr_zero(m)];
                if (pc >= 0)
                    block |= 1u << pc;
            }
            st.avail[w] &= ~block;
        }
    }
    SolveResult out;
    bool found = dfs(st, lim);
    out.nodes = st.nodes;
    out.hit_node_cap = st.capped;
    if (found)
        out.coloring = MultiColoring{std::move(st.chosen)};
    return out;
}

SolveResult find_multicoloring(const Cover& c, const QuotaMap& need, const SolveLimits& lim) {
    CoverSolver solver(c.base);
    solver.load(c);
    return solver.solve(need, lim);
}

bool check_multicoloring(const Cover& c, const QuotaMap& need, const MultiColoring& col) {
    if (col.chosen.size() != static_cast<size_t>(c.base.n()))
        return false;
    for (Vertex v = 0; v < c.base.n(); ++v) {
        uint32_t list_mask = (1u << c.list_size[v]) - 1;
        if (col.chosen[v] & ~list_mask)
            return false;
        if (std::popcount(col.chosen[v]) != need[v])
            return false;
    }
    for (size_t e = 0; e < c.matchings.size(); ++e) {
        auto [a, b] = c.base.edges()[e];
        for (auto [i, j] : c.matchings[e].pairs)
            if ((col.chosen[a] >> i & 1u) && (col.chosen[b] >> j & 1u))
                return false;
    }
    return true;
}

std::string write_multicoloring(const MultiColoring& col) {
    nlohmann::ordered_json doc;
    doc["coloring"] = col.to_lists();
    return doc.dump(2) + "\n";
}

MultiColoring read_multicoloring(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    auto lists = doc.at("coloring").get<std::vector<std::vector<int>>>();
    MultiColoring col;
    col.chosen.assign(lists.size(), 0);
    for (size_t v = 0; v < lists.size(); ++v)
        for (int c : lists[v])
            col.chosen[v] |= 1u << c;
    return col;
}

} // namespace dplab
