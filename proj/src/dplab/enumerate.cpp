#include "dplab/enumerate.hpp"

#include <algorithm>
#include <queue>

namespace dplab {

namespace {

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > UINT64_MAX / b)
        return UINT64_MAX;
    return a * b;
}

} // namespace

uint64_t comb_count(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral
        uint64_t num = static_cast<uint64_t>(n - k + i);
        if (r > UINT64_MAX / num)
            return UINT64_MAX;
        r = r * num / i;
    }
    return r;
}

uint64_t perm_count(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = sat_mul(r, static_cast<uint64_t>(n - i));
    return r;
}

void unrank_combination(int n, int k, uint64_t rank, std::vector<int>& out) {
    out.clear();
    int next = 0;
    while (k > 0) {
        uint64_t with_next = comb_count(n - next - 1, k - 1);
        if (rank < with_next) {
            out.push_back(next);
            --k;
        } else {
            rank -= with_next;
        }
        ++next;
    }
}

void unrank_injection(int domain, int codomain, uint64_t rank, std::vector<int>& out) {
    out.clear();
    std::vector<int> avail(codomain);
    for (int i = 0; i < codomain; ++i)
        avail[i] = i;
    for (int pos = 0; pos < domain; ++pos) {
        uint64_t rest = perm_count(codomain - pos - 1, domain - pos - 1);
        uint64_t idx = rank / rest;
        rank %= rest;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + static_cast<long>(idx));
    }
}

void EdgeChoice::fill(uint64_t rank, EdgeMatching& out, std::vector<int>& scratch) const {
    out.pairs.clear();
    switch (kind) {
    case Fixed:
        for (int i = 0; i < small; ++i)
            out.pairs.emplace_back(i, i);
        break;
    case SubsetOfFirst:
        unrank_combination(large, small, rank, scratch);
        for (int k = 0; k < small; ++k)
            out.pairs.emplace_back(scratch[k], k);
        break;
    case SubsetOfSecond:
        unrank_combination(large, small, rank, scratch);
        for (int k = 0; k < small; ++k)
            out.pairs.emplace_back(k, scratch[k]);
        break;
    case InjectFirstIntoSecond:
        unrank_injection(small, large, rank, scratch);
        for (int i = 0; i < small; ++i)
            out.pairs.emplace_back(i, scratch[i]);
        break;
    case InjectSecondIntoFirst:
        unrank_injection(small, large, rank, scratch);
        for (int j = 0; j < small; ++j)
            out.pairs.emplace_back(scratch[j], j);
        break;
    }
    std::sort(out.pairs.begin(), out.pairs.end());
}

CoverSpace::CoverSpace(const Graph& g, const QuotaMap& f) : g_(g), f_(f) {
    if (static_cast<int>(f.size()) != g.n())
        throw CoverError("cover space: list size map must cover every vertex");
    if (!is_connected(g))
        throw CoverError("cover space requires a connected base graph");
    std::vector<int> parent(g.n(), -2);
    std::queue<Vertex> q;
    q.push(0);
    parent[0] = -1;
    std::vector<char> tree_edge(g.edges().size(), 0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (parent[w] == -2) {
                parent[w] = v;
                tree_edge[g.edge_index(v, w)] = 1;
                q.push(w);
            }
        }
    }
    choices_.resize(g.edges().size());
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [a, b] = g.edges()[e];
        EdgeChoice& c = choices_[e];
        c.small = std::min(f[a], f[b]);
        c.large = std::max(f[a], f[b]);
        if (tree_edge[e]) {
            Vertex child = (parent[a] == b) ? a : b;
            Vertex par = (child == a) ? b : a;
            if (f[child] >= f[par]) {
                c.kind = EdgeChoice::Fixed;
                c.count = 1;
            } else {
                c.kind = (par == a) ? EdgeChoice::SubsetOfFirst : EdgeChoice::SubsetOfSecond;
                c.count = comb_count(c.large, c.small);
            }
        } else {
            c.kind = (f[a] <= f[b]) ? EdgeChoice::InjectFirstIntoSecond
                                    : EdgeChoice::InjectSecondIntoFirst;
            c.count = perm_count(c.large, c.small);
        }
        uint64_t next = sat_mul(size_, c.count);
        if (next == UINT64_MAX)
            overflow_ = true;
        size_ = next;
    }
}

Cover CoverSpace::make_scratch() const {
    std::vector<EdgeMatching> ms(g_.edges().size());
    return Cover{g_, f_, std::move(ms)};
}

void CoverSpace::decode(uint64_t index, Cover& out) const {
    std::vector<int> scratch;
    // edge 0 is the most significant digit
    for (size_t e = choices_.size(); e-- > 0;) {
        const EdgeChoice& c = choices_[e];
        uint64_t digit = index % c.count;
        index /= c.count;
        c.fill(digit, out.matchings[e], scratch);
    }
}

Cover CoverSpace::at(uint64_t index) const {
    Cover c = make_scratch();
    decode(index, c);
    return c;
}

Cover sample_raw_cover(const Graph& g, const QuotaMap& f, std::mt19937_64& rng) {
    std::vector<EdgeMatching> ms(g.edges().size());
    std::vector<int> scratch;
    for (size_t e = 0; e < ms.size(); ++e) {
        auto [a, b] = g.edges()[e];
        int small = std::min(f[a], f[b]);
        int large = std::max(f[a], f[b]);
        // uniform injection: sample without replacement
        scratch.clear();
        for (int i = 0; i < large; ++i)
            scratch.push_back(i);
        for (int i = 0; i < small; ++i) {
            std::uniform_int_distribution<int> d(i, large - 1);
            std::swap(scratch[i], scratch[d(rng)]);
        }
        for (int i = 0; i < small; ++i) {
            if (f[a] <= f[b])
                ms[e].pairs.emplace_back(i, scratch[i]);
            else
                ms[e].pairs.emplace_back(scratch[i], i);
        }
        std::sort(ms[e].pairs.begin(), ms[e].pairs.end());
    }
    return Cover{g, f, std::move(ms)};
}

uint64_t split_seed(uint64_t seed, uint64_t index) {
    // splitmix64 over seed ^ golden-ratio-stepped index
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Cover sample_cover_at(const Graph& g, const QuotaMap& f, uint64_t seed, uint64_t index) {
    std::mt19937_64 rng(split_seed(seed, index));
    return sample_raw_cover(g, f, rng);
}

std::vector<Cover> sample_covers(const Graph& g, const QuotaMap& f, uint64_t count, uint64_t seed) {
    std::vector<Cover> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i)
        out.push_back(sample_cover_at(g, f, seed, i));
    return out;
}

} // namespace dplab
