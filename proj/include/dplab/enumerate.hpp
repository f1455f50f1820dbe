#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dplab/cover.hpp"

namespace dplab {

uint64_t comb_count(int n, int k);                 // C(n,k), saturating at UINT64_MAX
uint64_t perm_count(int n, int k);                 // n!/(n-k)!, saturating
void unrank_combination(int n, int k, uint64_t rank, std::vector<int>& out); // ascending
void unrank_injection(int domain, int codomain, uint64_t rank, std::vector<int>& out); // lex

// Choice space of one edge in the canonical enumeration.
//  Fixed:            identity pattern {(i,i) : i < min}, single choice
//  SubsetOfFirst:    tree edge, parent = edges()[e].first has the larger list;
//                    pairs (s_k, k) over ascending subsets s of the parent list
//  SubsetOfSecond:   mirrored
//  InjectFirstIntoSecond / InjectSecondIntoFirst: non-tree edge, all
//                    saturating injections from the smaller list
struct EdgeChoice {
    enum Kind { Fixed, SubsetOfFirst, SubsetOfSecond, InjectFirstIntoSecond, InjectSecondIntoFirst };
    Kind kind = Fixed;
    int small = 0; // size of the saturated (smaller) list
    int large = 0;
    uint64_t count = 1;

    void fill(uint64_t rank, EdgeMatching& out, std::vector<int>& scratch) const;
};

// Canonical representatives of all saturating covers of (g, f) modulo
// per-list relabeling: every saturating cover is isomorphic to at least one
// enumerated cover (tree edges in normalize()'s canonical pattern, non-tree
// edges ranging over all injections).
class CoverSpace {
public:
    CoverSpace(const Graph& g, const QuotaMap& f); // throws CoverError if disconnected

    // Number of covers; nullopt when the product overflows uint64.
    std::optional<uint64_t> size() const { return overflow_ ? std::nullopt : std::optional(size_); }
    bool overflow() const { return overflow_; }

    Cover make_scratch() const;
    void decode(uint64_t index, Cover& out) const; // edge 0 is most significant
    Cover at(uint64_t index) const;

    const std::vector<EdgeChoice>& choices() const { return choices_; }
    const Graph& graph() const { return g_; }
    const QuotaMap& quotas() const { return f_; }

private:
    Graph g_;
    QuotaMap f_;
    std::vector<EdgeChoice> choices_;
    uint64_t size_ = 1;
    bool overflow_ = false;
};

// One uniformly random saturating (raw) cover; used for statistical runs.
Cover sample_raw_cover(const Graph& g, const QuotaMap& f, std::mt19937_64& rng);

// Reproducible stream: sample i is drawn from a generator seeded by
// mix(seed, i), so shards can regenerate any subrange.
std::vector<Cover> sample_covers(const Graph& g, const QuotaMap& f, uint64_t count, uint64_t seed);
Cover sample_cover_at(const Graph& g, const QuotaMap& f, uint64_t seed, uint64_t index);

uint64_t split_seed(uint64_t seed, uint64_t index);

} // namespace dplab
