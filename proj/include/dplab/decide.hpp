#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "dplab/coloring.hpp"
#include "dplab/enumerate.hpp"

#include <json.hpp>

namespace dplab {

enum class Outcome { True, False, CoverCapExceeded, NodeCapExceeded };

const char* outcome_name(Outcome o);

struct DecideOptions {
    uint64_t cover_cap = 100'000'000ULL;
    SolveLimits limits{};
    int workers = 0; // 0 = hardware concurrency
    bool sample = false;
    uint64_t sample_count = 100'000;
    uint64_t seed = 0;
    std::optional<std::pair<uint64_t, uint64_t>> shard; // (index, total)
};

struct Verdict {
    Outcome outcome = Outcome::True;
    std::optional<Cover> witness_cover;
    uint64_t witness_index = 0;
    uint64_t covers_checked = 0;
    uint64_t nodes_expanded = 0;
    uint64_t space_size = 0;
    bool space_overflow = false;
    bool statistical = false;

    bool answer() const { return outcome == Outcome::True; }
};

nlohmann::ordered_json verdict_to_json(const Verdict& v);

// True iff every cover in the canonical space admits an (H,g)-coloring; on
// False the witness is the first failing cover in enumeration order. The
// result is identical for any worker count.
Verdict is_dp_colorable(const Graph& g, const QuotaMap& f, const QuotaMap& gq,
                        const DecideOptions& opts = {});

// Single-cover decision, mainly for witness replay and cmd_solve.
SolveResult solve_cover(const Cover& c, const QuotaMap& gq, const SolveLimits& lim = {});

struct PreceqQuery {
    Graph graph;
    std::vector<Vertex> X;
    QuotaMap f, g, h; // h values off X are ignored
};

// (f,h)_X <= (f,g)_G: for every cover there is an (H,h)-coloring phi of G[X]
// that has a g-augmentation and all of whose g-augmentations extend to G.
Verdict check_preceq(const PreceqQuery& q, const DecideOptions& opts = {});

// The per-cover body of check_preceq; used for witness replay.
bool preceq_holds_on_cover(const PreceqQuery& q, const Cover& c, const SolveLimits& lim = {});

struct LemmaKeyInstance {
    std::array<int, 3> f;
    std::array<int, 3> g;
    int p = 0;
};

struct LemmaKeyReport {
    bool hypotheses_ok = false;
    std::string hypothesis_note;
    Verdict verdict;
};

// The 3-path kernel: h=(p,0,p); hypotheses f1-f2+f3 >= p and
// f2 >= g1+g2+g3-p. Violated hypotheses are reported, the check still runs.
LemmaKeyReport check_lemma_key_instance(const LemmaKeyInstance& inst,
                                        const DecideOptions& opts = {});

struct ImplicationReport {
    Verdict premise;
    Verdict conclusion;
    bool implication_holds = false;
};

// h -> h' monotonicity: premise with q.h, conclusion with h_prime (h <= h' <= g).
ImplicationReport check_monotonicity(const PreceqQuery& q, const QuotaMap& h_prime,
                                     const DecideOptions& opts = {});
// X' subset of X restriction.
ImplicationReport check_restriction(const PreceqQuery& q, const std::vector<Vertex>& x_prime,
                                    const DecideOptions& opts = {});

struct GluingInstance {
    Graph graph;
    std::vector<Vertex> part1, part2; // V(G1), V(G2); intersection is the cut X
    std::vector<Vertex> X1, X2;       // X subset of Xi subset of V(Gi)
    QuotaMap f, g, h1, h2;            // hi zero off Xi
};

struct GluingReport {
    Verdict premise1, premise2, conclusion;
    bool implication_holds = false;
};

GluingReport check_gluing(const GluingInstance& inst, const DecideOptions& opts = {});

struct CutReductionInstance {
    Graph graph;
    std::vector<Vertex> part1, part2, X;
    QuotaMap f, g, h;
};

struct CutReductionReport {
    Verdict premise_preceq;  // (f,h)_X preceq (f,g)_{G1}
    Verdict premise_colorable; // G2 is (f',g')-DP-colorable
    Verdict conclusion;        // G is (f,g)-DP-colorable
    QuotaMap f_prime, g_prime;
    bool vacuous = false; // f' negative or g' > f' somewhere on G2
    bool implication_holds = false;
};

CutReductionReport check_cut_reduction(const CutReductionInstance& inst,
                                       const DecideOptions& opts = {});

// Deterministic parallel fold over indices [0, count): evaluates a per-index
// check, returns the least failing index regardless of scheduling. Exposed
// for the lemma suite and tests.
struct DriveResult {
    bool all_ok = true;
    uint64_t first_bad = UINT64_MAX;
    bool bad_is_node_cap = false;
    uint64_t covers_checked = 0;
    uint64_t nodes = 0;
};

enum class CoverCheck { Ok, Fail, NodeCap };

DriveResult drive_indices(uint64_t count, int workers,
                          const std::function<std::function<CoverCheck(uint64_t, uint64_t&)>()>& make_worker);

} // namespace dplab
