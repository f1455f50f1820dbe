#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dplab/cover.hpp"

namespace dplab {

// Chosen color indices per vertex, as bitmasks. Lists are capped at 31
// colors, which covers every quota in this project (7m at m <= 4).
constexpr int kMaxColors = 31;

struct MultiColoring {
    std::vector<uint32_t> chosen;

    std::vector<std::vector<int>> to_lists() const;
};

struct SolveLimits {
    uint64_t max_nodes = 1'000'000;
};

struct SolveResult {
    std::optional<MultiColoring> coloring;
    uint64_t nodes = 0;
    bool hit_node_cap = false;
};

// Backtracking search for a quasi-independent selection taking exactly
// need(v) colors from each list. Vertex order: decreasing need/avail ratio;
// colors in index order; forward checking prunes a branch as soon as some
// remaining list drops below its residual quota.
class CoverSolver {
public:
    explicit CoverSolver(const Graph& g);

    void load(const Cover& c); // cover base must be the constructor graph

    SolveResult solve(const QuotaMap& need, const SolveLimits& lim = {});
    // Some vertices pre-assigned: fixed[v] != 0 means chosen mask pre[v] is
    // final for v (its quota is considered met).
    SolveResult complete(const QuotaMap& need, const std::vector<uint32_t>& pre,
                         const std::vector<uint8_t>& fixed, const SolveLimits& lim = {});

private:
    const Graph* g_ = nullptr;
    QuotaMap f_;
    std::vector<int> nbr_off_;
    std::vector<Vertex> nbr_flat_;
    std::vector<std::array<int8_t, kMaxColors>> partner_; // per dart (nbr_off_ indexed)

    struct State;
    bool dfs(State& st, const SolveLimits& lim);
};

SolveResult find_multicoloring(const Cover& c, const QuotaMap& need, const SolveLimits& lim = {});

// Independent checker: exact quotas, chosen within lists, no matching pair
// fully chosen. Deliberately written against the raw pair lists.
bool check_multicoloring(const Cover& c, const QuotaMap& need, const MultiColoring& col);

std::string write_multicoloring(const MultiColoring& col);
MultiColoring read_multicoloring(const std::string& json_text);

} // namespace dplab
