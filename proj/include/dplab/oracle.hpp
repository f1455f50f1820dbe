#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dplab/cover.hpp"
#include "dplab/quota.hpp"

namespace dplab::oracle {

// Naive reference side of the dual-route check. Enumerates raw covers (every
// saturating partial injection on every edge, no spanning-tree reduction) and
// per cover tries color selections one vertex at a time, checking conflicts
// against the raw pair lists. Kept deliberately independent of CoverSpace and
// CoverSolver.

std::vector<Cover> raw_covers(const Graph& g, const QuotaMap& f);
uint64_t raw_cover_count(const Graph& g, const QuotaMap& f);
bool naive_cover_colorable(const Cover& c, const QuotaMap& gq);
bool naive_is_dp_colorable(const Graph& g, const QuotaMap& f, const QuotaMap& gq);

// All connected graphs on at most four vertices, one per isomorphism class.
std::vector<Graph> small_connected_graphs(int max_n);

struct SweepMismatch {
    std::string description;
};

struct SweepResult {
    uint64_t instances = 0;
    std::vector<SweepMismatch> mismatches;
};

// Compares naive_is_dp_colorable with the normalized decision procedure on
// every (graph, f, g) with f <= max_f pointwise and g <= f.
SweepResult cross_check_small_graphs(int max_n, int max_f, int workers);

} // namespace dplab::oracle
