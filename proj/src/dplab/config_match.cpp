#include "dplab/config_match.hpp"

#include <algorithm>

namespace dplab {

namespace {

struct Matcher {
    const Graph& host;
    const ConfigPattern& pat;
    std::vector<Vertex> assign;   // pattern -> host, -1 unset
    std::vector<char> used;       // host vertex taken
    std::vector<int> order;       // pattern vertices, connectivity-first
    std::vector<std::vector<Vertex>> results;

    Matcher(const Graph& h, const ConfigPattern& p) : host(h), pat(p) {
        int k = pat.graph.n();
        assign.assign(k, -1);
        used.assign(host.n(), 0);
        // order: start at 0, prefer vertices adjacent to already-ordered ones
        std::vector<char> placed(k, 0);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_links = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[v])
                    continue;
                int links = 0;
                for (Vertex w : pat.graph.neighbors(v))
                    if (placed[w])
                        ++links;
                if (links > best_links) {
                    best_links = links;
                    best = v;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool consistent(int pv, Vertex hv) const {
        if (!pat.labels[pv].matches(host.degree(hv)))
            return false;
        for (int qv = 0; qv < pat.graph.n(); ++qv) {
            if (assign[qv] < 0)
                continue;
            bool pe = pat.graph.has_edge(pv, qv);
            bool he = host.has_edge(hv, assign[qv]);
            if (pe != he) // induced: adjacency must match exactly
                return false;
        }
        return true;
    }

    void run(size_t depth) {
        if (depth == order.size()) {
            results.push_back(assign);
            return;
        }
        int pv = order[depth];
        for (Vertex hv = 0; hv < host.n(); ++hv) {
            if (used[hv] || !consistent(pv, hv))
                continue;
            assign[pv] = hv;
            used[hv] = 1;
            run(depth + 1);
            assign[pv] = -1;
            used[hv] = 0;
        }
    }
};

} // namespace

std::vector<std::vector<Vertex>> find_configuration(const Graph& host, const ConfigPattern& pattern) {
    if (pattern.graph.n() == 0)
        return {{}};
    if (static_cast<int>(pattern.labels.size()) != pattern.graph.n())
        throw GraphError("find_configuration: label count != pattern size");
    Matcher m(host, pattern);
    m.run(0);
    std::sort(m.results.begin(), m.results.end());
    return m.results;
}

std::vector<ConfigPattern> expand_degree_labels(const ConfigPattern& pattern, int max_degree) {
    std::vector<ConfigPattern> out{ConfigPattern{pattern.graph, pattern.labels}};
    for (size_t i = 0; i < pattern.labels.size(); ++i) {
        if (!pattern.labels[i].at_least)
            continue;
        std::vector<ConfigPattern> next;
        for (const auto& p : out) {
            for (int d = p.labels[i].value; d <= max_degree; ++d) {
                ConfigPattern q = p;
                q.labels[i] = DegreeLabel{d, d == max_degree};
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace dplab
