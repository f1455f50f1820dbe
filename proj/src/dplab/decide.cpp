#include "dplab/decide.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace dplab {

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::True: return "true";
    case Outcome::False: return "false";
    case Outcome::CoverCapExceeded: return "cover-cap-exceeded";
    case Outcome::NodeCapExceeded: return "node-cap-exceeded";
    }
    return "?";
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["answer"] = v.answer();
    j["outcome"] = outcome_name(v.outcome);
    j["covers_checked"] = v.covers_checked;
    j["nodes_expanded"] = v.nodes_expanded;
    j["space_size"] = v.space_overflow ? nlohmann::ordered_json("overflow")
                                       : nlohmann::ordered_json(v.space_size);
    j["statistical"] = v.statistical;
    if (v.witness_cover) {
        j["witness_index"] = v.witness_index;
        j["witness_cover"] = nlohmann::ordered_json::parse(write_cover(*v.witness_cover));
    }
    return j;
}

DriveResult drive_indices(uint64_t count, int workers,
                          const std::function<std::function<CoverCheck(uint64_t, uint64_t&)>()>& make_worker) {
    DriveResult out;
    if (count == 0) {
        out.covers_checked = 0;
        return out;
    }
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? static_cast<int>(std::min(hw, 8u)) : 1;
    }
    uint64_t chunk = std::max<uint64_t>(1, std::min<uint64_t>(4096, count / (static_cast<uint64_t>(workers) * 8) + 1));
    uint64_t num_chunks = (count + chunk - 1) / chunk;

    struct ChunkRecord {
        uint64_t nodes = 0;
        uint64_t bad = UINT64_MAX;
        bool bad_is_cap = false;
        bool skipped = false;
    };
    std::vector<ChunkRecord> records(num_chunks);
    std::atomic<uint64_t> next_chunk{0};
    std::atomic<uint64_t> first_bad{UINT64_MAX};

    auto work = [&]() {
        auto check = make_worker();
        while (true) {
            uint64_t k = next_chunk.fetch_add(1);
            if (k >= num_chunks)
                break;
            uint64_t lo = k * chunk;
            uint64_t hi = std::min(count, lo + chunk);
            ChunkRecord& rec = records[k];
            if (first_bad.load(std::memory_order_relaxed) < lo) {
                rec.skipped = true; // beyond the earliest failure: never needed
                continue;
            }
            for (uint64_t i = lo; i < hi; ++i) {
                uint64_t nodes = 0;
                CoverCheck r = check(i, nodes);
                rec.nodes += nodes;
                if (r != CoverCheck::Ok) {
                    rec.bad = i;
                    rec.bad_is_cap = (r == CoverCheck::NodeCap);
                    uint64_t cur = first_bad.load();
                    while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };
    if (workers == 1) {
        // sequential fast path, also used to pin down reference behavior
        auto check = make_worker();
        for (uint64_t k = 0; k < num_chunks; ++k) {
            uint64_t lo = k * chunk;
            uint64_t hi = std::min(count, lo + chunk);
            ChunkRecord& rec = records[k];
            if (first_bad.load() < lo) {
                rec.skipped = true;
                continue;
            }
            for (uint64_t i = lo; i < hi; ++i) {
                uint64_t nodes = 0;
                CoverCheck r = check(i, nodes);
                rec.nodes += nodes;
                if (r != CoverCheck::Ok) {
                    rec.bad = i;
                    rec.bad_is_cap = (r == CoverCheck::NodeCap);
                    first_bad.store(std::min(first_bad.load(), i));
                    break;
                }
            }
        }
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    uint64_t bad = UINT64_MAX;
    bool bad_cap = false;
    for (const auto& rec : records) {
        if (rec.bad < bad) {
            bad = rec.bad;
            bad_cap = rec.bad_is_cap;
        }
    }
    if (bad == UINT64_MAX) {
        out.all_ok = true;
        out.covers_checked = count;
        for (const auto& rec : records)
            out.nodes += rec.nodes;
    } else {
        out.all_ok = false;
        out.first_bad = bad;
        out.bad_is_node_cap = bad_cap;
        out.covers_checked = bad + 1;
        // canonical node count: chunks strictly before the failing chunk plus
        // the failing chunk's own prefix (its worker stopped at the failure)
        uint64_t bad_chunk = bad / chunk;
        for (uint64_t k = 0; k <= bad_chunk; ++k)
            out.nodes += records[k].nodes;
    }
    return out;
}

namespace {

struct ShardSlice {
    uint64_t lo = 0, hi = 0;
};

ShardSlice shard_slice(uint64_t count, const std::optional<std::pair<uint64_t, uint64_t>>& shard) {
    if (!shard)
        return {0, count};
    auto [idx, total] = *shard;
    if (total == 0 || idx >= total)
        throw CoverError("invalid shard spec");
    return {count * idx / total, count * (idx + 1) / total};
}

void validate_quotas(const Graph& g, const QuotaMap& f, const QuotaMap& gq) {
    if (static_cast<int>(f.size()) != g.n() || static_cast<int>(gq.size()) != g.n())
        throw CoverError("quota maps must cover every vertex");
    for (Vertex v = 0; v < g.n(); ++v) {
        if (f[v] < 0 || gq[v] < 0)
            throw CoverError("negative quota");
        if (f[v] > kMaxColors)
            throw CoverError("list size exceeds color capacity");
    }
}

} // namespace

Verdict is_dp_colorable(const Graph& g, const QuotaMap& f, const QuotaMap& gq,
                        const DecideOptions& opts) {
    validate_quotas(g, f, gq);
    Verdict v;
    for (Vertex x = 0; x < g.n(); ++x) {
        if (gq[x] > f[x]) {
            // no cover admits a selection; the identity cover witnesses this
            v.outcome = Outcome::False;
            v.witness_cover = identity_cover(g, f);
            v.covers_checked = 1;
            return v;
        }
    }
    CoverSpace space(g, f);
    v.space_overflow = space.overflow();
    v.space_size = space.size().value_or(0);

    if (!opts.sample) {
        if (space.overflow() || *space.size() > opts.cover_cap) {
            v.outcome = Outcome::CoverCapExceeded;
            return v;
        }
        auto slice = shard_slice(*space.size(), opts.shard);
        uint64_t count = slice.hi - slice.lo;
        auto make_worker = [&]() {
            auto solver = std::make_shared<CoverSolver>(g);
            auto scratch = std::make_shared<Cover>(space.make_scratch());
            return std::function<CoverCheck(uint64_t, uint64_t&)>(
                [&, solver, scratch](uint64_t i, uint64_t& nodes) {
                    space.decode(slice.lo + i, *scratch);
                    solver->load(*scratch);
                    SolveResult r = solver->solve(gq, opts.limits);
                    nodes = r.nodes;
                    if (r.hit_node_cap)
                        return CoverCheck::NodeCap;
                    return r.coloring ? CoverCheck::Ok : CoverCheck::Fail;
                });
        };
        DriveResult d = drive_indices(count, opts.workers, make_worker);
        v.covers_checked = d.covers_checked;
        v.nodes_expanded = d.nodes;
        if (d.all_ok) {
            v.outcome = Outcome::True;
        } else {
            v.outcome = d.bad_is_node_cap ? Outcome::NodeCapExceeded : Outcome::False;
            v.witness_index = slice.lo + d.first_bad;
            v.witness_cover = space.at(v.witness_index);
        }
        return v;
    }

    // statistical mode over raw samples
    auto slice = shard_slice(opts.sample_count, opts.shard);
    uint64_t count = slice.hi - slice.lo;
    v.statistical = true;
    auto make_worker = [&]() {
        auto solver = std::make_shared<CoverSolver>(g);
        return std::function<CoverCheck(uint64_t, uint64_t&)>(
            [&, solver](uint64_t i, uint64_t& nodes) {
                Cover c = sample_cover_at(g, f, opts.seed, slice.lo + i);
                solver->load(c);
                SolveResult r = solver->solve(gq, opts.limits);
                nodes = r.nodes;
                if (r.hit_node_cap)
                    return CoverCheck::NodeCap;
                return r.coloring ? CoverCheck::Ok : CoverCheck::Fail;
            });
    };
    DriveResult d = drive_indices(count, opts.workers, make_worker);
    v.covers_checked = d.covers_checked;
    v.nodes_expanded = d.nodes;
    if (d.all_ok) {
        v.outcome = Outcome::True;
    } else {
        v.outcome = d.bad_is_node_cap ? Outcome::NodeCapExceeded : Outcome::False;
        v.witness_index = slice.lo + d.first_bad;
        v.witness_cover = sample_cover_at(g, f, opts.seed, v.witness_index);
    }
    return v;
}

SolveResult solve_cover(const Cover& c, const QuotaMap& gq, const SolveLimits& lim) {
    return find_multicoloring(c, gq, lim);
}

namespace {

// Enumerates per-vertex color subsets over an ordered vertex set, in
// lexicographic order (vertex-major, combinations of ascending indices).
struct SubsetOdometer {
    struct Slot {
        uint32_t pool;   // colors to draw from
        int k;           // how many
        std::vector<int> bits;
        std::vector<int> idx;
    };
    std::vector<Slot> slots;
    bool done = false;

    void init(const std::vector<uint32_t>& pools, const std::vector<int>& ks) {
        slots.clear();
        done = false;
        for (size_t s = 0; s < pools.size(); ++s) {
            Slot sl;
            sl.pool = pools[s];
            sl.k = ks[s];
            for (uint32_t m = pools[s]; m; m &= m - 1)
                sl.bits.push_back(std::countr_zero(m));
            if (sl.k > static_cast<int>(sl.bits.size())) {
                done = true; // no subset at all
                return;
            }
            sl.idx.resize(sl.k);
            for (int i = 0; i < sl.k; ++i)
                sl.idx[i] = i;
            slots.push_back(std::move(sl));
        }
    }

    uint32_t mask(size_t s) const {
        uint32_t m = 0;
        for (int i : slots[s].idx)
            m |= 1u << slots[s].bits[i];
        return m;
    }

    // advance slot s to its next combination; false if it wrapped
    bool bump(Slot& sl) {
        int k = sl.k;
        int n = static_cast<int>(sl.bits.size());
        int i = k - 1;
        while (i >= 0 && sl.idx[i] == n - k + i)
            --i;
        if (i < 0) {
            for (int j = 0; j < k; ++j)
                sl.idx[j] = j;
            return false;
        }
        ++sl.idx[i];
        for (int j = i + 1; j < k; ++j)
            sl.idx[j] = sl.idx[j - 1] + 1;
        return true;
    }

    void advance() {
        for (size_t s = slots.size(); s-- > 0;) {
            if (bump(slots[s]))
                return;
        }
        done = true;
    }
};

struct PreceqChecker {
    const Graph& g;
    std::vector<Vertex> X;
    QuotaMap f, gq, h;
    CoverSolver solver;
    // cross edges within G[X]: (slot a, slot b, edge index, flipped)
    struct XEdge {
        int sa, sb;
        int edge;
        bool flipped; // cover pair (i,j) refers to (edges.first, edges.second)
    };
    std::vector<XEdge> xedges;

    PreceqChecker(const PreceqQuery& q) : g(q.graph), X(q.X), f(q.f), gq(q.g), h(q.h), solver(q.graph) {
        std::sort(X.begin(), X.end());
        X.erase(std::unique(X.begin(), X.end()), X.end());
        for (Vertex x : X)
            if (x < 0 || x >= g.n())
                throw CoverError("preceq: X vertex out of range");
        validate_quotas(g, f, gq);
        if (static_cast<int>(h.size()) != g.n())
            throw CoverError("preceq: h must cover every vertex");
        if (!quota_leq(gq, f))
            throw CoverError("preceq: g must be pointwise at most f");
        for (Vertex x : X)
            if (h[x] > gq[x] || h[x] < 0)
                throw CoverError("preceq: need h <= g on X");
        for (size_t a = 0; a < X.size(); ++a)
            for (size_t b = a + 1; b < X.size(); ++b) {
                int e = g.edge_index(X[a], X[b]);
                if (e >= 0)
                    xedges.push_back({static_cast<int>(a), static_cast<int>(b), e,
                                      g.edges()[e].first != X[a]});
            }
    }

    bool quasi_independent(const Cover& c, const std::vector<uint32_t>& mask) const {
        for (const auto& xe : xedges) {
            uint32_t ma = mask[xe.sa], mb = mask[xe.sb];
            for (auto [i, j] : c.matchings[xe.edge].pairs) {
                int ca = xe.flipped ? j : i;
                int cb = xe.flipped ? i : j;
                if ((ma >> ca & 1u) && (mb >> cb & 1u))
                    return false;
            }
        }
        return true;
    }

    // CoverCheck semantics; nodes accumulates solver work
    CoverCheck check(const Cover& c, const SolveLimits& lim, uint64_t& nodes) {
        solver.load(c);
        size_t xs = X.size();
        std::vector<uint32_t> full(xs), phi(xs), psi(xs);
        std::vector<int> hk(xs), augk(xs);
        for (size_t s = 0; s < xs; ++s) {
            full[s] = (1u << f[X[s]]) - 1;
            hk[s] = h[X[s]];
            augk[s] = gq[X[s]] - h[X[s]];
        }
        std::vector<uint32_t> pre(g.n(), 0);
        std::vector<uint8_t> fixed(g.n(), 0);
        for (Vertex x : X)
            fixed[x] = 1;
        QuotaMap need = gq;

        SubsetOdometer phi_odo;
        phi_odo.init(full, hk);
        bool capped = false;
        while (!phi_odo.done) {
            for (size_t s = 0; s < xs; ++s)
                phi[s] = phi_odo.mask(s);
            if (!quasi_independent(c, phi)) {
                phi_odo.advance();
                continue;
            }
            // all g-augmentations of phi must extend; at least one must exist
            std::vector<uint32_t> pools(xs);
            for (size_t s = 0; s < xs; ++s)
                pools[s] = full[s] & ~phi[s];
            SubsetOdometer aug_odo;
            aug_odo.init(pools, augk);
            bool any_aug = false;
            bool all_extend = true;
            while (!aug_odo.done) {
                for (size_t s = 0; s < xs; ++s)
                    psi[s] = phi[s] | aug_odo.mask(s);
                if (!quasi_independent(c, psi)) {
                    aug_odo.advance();
                    continue;
                }
                any_aug = true;
                for (size_t s = 0; s < xs; ++s)
                    pre[X[s]] = psi[s];
                SolveResult r = solver.complete(need, pre, fixed, lim);
                nodes += r.nodes;
                if (r.hit_node_cap) {
                    capped = true;
                    all_extend = false;
                    break;
                }
                if (!r.coloring) {
                    all_extend = false;
                    break;
                }
                aug_odo.advance();
            }
            if (any_aug && all_extend)
                return CoverCheck::Ok;
            if (capped)
                return CoverCheck::NodeCap;
            phi_odo.advance();
        }
        return CoverCheck::Fail;
    }
};

} // namespace

Verdict check_preceq(const PreceqQuery& q, const DecideOptions& opts) {
    Verdict v;
    CoverSpace space(q.graph, q.f);
    v.space_overflow = space.overflow();
    v.space_size = space.size().value_or(0);

    if (!opts.sample) {
        if (space.overflow() || *space.size() > opts.cover_cap) {
            v.outcome = Outcome::CoverCapExceeded;
            return v;
        }
        auto slice = shard_slice(*space.size(), opts.shard);
        uint64_t count = slice.hi - slice.lo;
        auto make_worker = [&]() {
            auto checker = std::make_shared<PreceqChecker>(q);
            auto scratch = std::make_shared<Cover>(space.make_scratch());
            return std::function<CoverCheck(uint64_t, uint64_t&)>(
                [&, checker, scratch](uint64_t i, uint64_t& nodes) {
                    space.decode(slice.lo + i, *scratch);
                    return checker->check(*scratch, opts.limits, nodes);
                });
        };
        DriveResult d = drive_indices(count, opts.workers, make_worker);
        v.covers_checked = d.covers_checked;
        v.nodes_expanded = d.nodes;
        if (d.all_ok) {
            v.outcome = Outcome::True;
        } else {
            v.outcome = d.bad_is_node_cap ? Outcome::NodeCapExceeded : Outcome::False;
            v.witness_index = slice.lo + d.first_bad;
            v.witness_cover = space.at(v.witness_index);
        }
        return v;
    }

    auto slice = shard_slice(opts.sample_count, opts.shard);
    v.statistical = true;
    auto make_worker = [&]() {
        auto checker = std::make_shared<PreceqChecker>(q);
        return std::function<CoverCheck(uint64_t, uint64_t&)>(
            [&, checker](uint64_t i, uint64_t& nodes) {
                Cover c = sample_cover_at(q.graph, q.f, opts.seed, slice.lo + i);
                return checker->check(c, opts.limits, nodes);
            });
    };
    DriveResult d = drive_indices(slice.hi - slice.lo, opts.workers, make_worker);
    v.covers_checked = d.covers_checked;
    v.nodes_expanded = d.nodes;
    if (d.all_ok) {
        v.outcome = Outcome::True;
    } else {
        v.outcome = d.bad_is_node_cap ? Outcome::NodeCapExceeded : Outcome::False;
        v.witness_index = slice.lo + d.first_bad;
        v.witness_cover = sample_cover_at(q.graph, q.f, opts.seed, v.witness_index);
    }
    return v;
}

bool preceq_holds_on_cover(const PreceqQuery& q, const Cover& c, const SolveLimits& lim) {
    PreceqChecker checker(q);
    uint64_t nodes = 0;
    return checker.check(c, lim, nodes) == CoverCheck::Ok;
}

LemmaKeyReport check_lemma_key_instance(const LemmaKeyInstance& inst, const DecideOptions& opts) {
    LemmaKeyReport rep;
    auto [f1, f2, f3] = inst.f;
    auto [g1, g2, g3] = inst.g;
    int p = inst.p;
    rep.hypotheses_ok = true;
    auto note = [&](const std::string& s) {
        rep.hypotheses_ok = false;
        if (!rep.hypothesis_note.empty())
            rep.hypothesis_note += "; ";
        rep.hypothesis_note += s;
    };
    if (!(p >= 0 && p <= g1 && p <= g3))
        note("h=(p,0,p) <= g fails");
    if (!(g1 <= f1 && g2 <= f2 && g3 <= f3))
        note("g <= f fails");
    if (!(f1 - f2 + f3 >= p))
        note("f(v1)-f(v2)+f(v3) >= p fails");
    if (!(f2 >= g1 + g2 + g3 - p))
        note("f(v2) >= g(v1)+g(v2)+g(v3)-p fails");
    PreceqQuery q;
    q.graph = path_graph(3);
    q.X = {0, 2};
    q.f = {f1, f2, f3};
    q.g = {g1, g2, g3};
    q.h = {p, 0, p};
    rep.verdict = check_preceq(q, opts);
    return rep;
}

ImplicationReport check_monotonicity(const PreceqQuery& q, const QuotaMap& h_prime,
                                     const DecideOptions& opts) {
    ImplicationReport rep;
    rep.premise = check_preceq(q, opts);
    PreceqQuery q2 = q;
    q2.h = h_prime;
    rep.conclusion = check_preceq(q2, opts);
    rep.implication_holds = !rep.premise.answer() || rep.conclusion.answer();
    return rep;
}

ImplicationReport check_restriction(const PreceqQuery& q, const std::vector<Vertex>& x_prime,
                                    const DecideOptions& opts) {
    for (Vertex v : x_prime)
        if (std::find(q.X.begin(), q.X.end(), v) == q.X.end())
            throw CoverError("check_restriction: X' must be a subset of X");
    ImplicationReport rep;
    rep.premise = check_preceq(q, opts);
    PreceqQuery q2 = q;
    q2.X = x_prime;
    rep.conclusion = check_preceq(q2, opts);
    rep.implication_holds = !rep.premise.answer() || rep.conclusion.answer();
    return rep;
}

namespace {

// Quotas restricted to an induced subgraph via its vertex map.
QuotaMap restrict_quota(const QuotaMap& q, const std::vector<Vertex>& to_host) {
    QuotaMap out(to_host.size());
    for (size_t i = 0; i < to_host.size(); ++i)
        out[i] = q[to_host[i]];
    return out;
}

std::vector<Vertex> map_into(const std::vector<Vertex>& xs, const std::vector<Vertex>& to_host) {
    std::vector<Vertex> out;
    for (Vertex x : xs) {
        auto it = std::lower_bound(to_host.begin(), to_host.end(), x);
        if (it == to_host.end() || *it != x)
            throw CoverError("vertex not inside the part it should belong to");
        out.push_back(static_cast<Vertex>(it - to_host.begin()));
    }
    return out;
}

void validate_separation(const Graph& g, const std::vector<Vertex>& part1,
                         const std::vector<Vertex>& part2, std::vector<Vertex>& X_out) {
    std::vector<char> in1(g.n(), 0), in2(g.n(), 0);
    for (Vertex v : part1)
        in1[v] = 1;
    for (Vertex v : part2)
        in2[v] = 1;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!in1[v] && !in2[v])
            throw CoverError("parts must cover the whole graph");
    X_out.clear();
    for (Vertex v = 0; v < g.n(); ++v)
        if (in1[v] && in2[v])
            X_out.push_back(v);
    if (X_out.empty())
        throw CoverError("empty cut set");
    for (auto [u, v] : g.edges()) {
        bool u_only1 = in1[u] && !in2[u], v_only1 = in1[v] && !in2[v];
        bool u_only2 = in2[u] && !in1[u], v_only2 = in2[v] && !in1[v];
        if ((u_only1 && v_only2) || (u_only2 && v_only1))
            throw CoverError("X is not a separator: edge crosses the parts");
    }
}

} // namespace

GluingReport check_gluing(const GluingInstance& inst, const DecideOptions& opts) {
    std::vector<Vertex> X;
    validate_separation(inst.graph, inst.part1, inst.part2, X);
    Subgraph g1 = induced_subgraph(inst.graph, inst.part1);
    Subgraph g2 = induced_subgraph(inst.graph, inst.part2);

    GluingReport rep;
    PreceqQuery q1{g1.graph, map_into(inst.X1, g1.to_host), restrict_quota(inst.f, g1.to_host),
                   restrict_quota(inst.g, g1.to_host), restrict_quota(inst.h1, g1.to_host)};
    PreceqQuery q2{g2.graph, map_into(inst.X2, g2.to_host), restrict_quota(inst.f, g2.to_host),
                   restrict_quota(inst.g, g2.to_host), restrict_quota(inst.h2, g2.to_host)};
    rep.premise1 = check_preceq(q1, opts);
    rep.premise2 = check_preceq(q2, opts);

    QuotaMap h_sum(inst.graph.n(), 0);
    std::vector<Vertex> x_union = inst.X1;
    x_union.insert(x_union.end(), inst.X2.begin(), inst.X2.end());
    std::sort(x_union.begin(), x_union.end());
    x_union.erase(std::unique(x_union.begin(), x_union.end()), x_union.end());
    for (Vertex v = 0; v < inst.graph.n(); ++v)
        h_sum[v] = inst.h1[v] + inst.h2[v];
    if (!quota_leq(h_sum, inst.g))
        throw CoverError("check_gluing requires h1+h2 <= g");
    PreceqQuery qc{inst.graph, x_union, inst.f, inst.g, h_sum};
    rep.conclusion = check_preceq(qc, opts);
    rep.implication_holds =
        !(rep.premise1.answer() && rep.premise2.answer()) || rep.conclusion.answer();
    return rep;
}

CutReductionReport check_cut_reduction(const CutReductionInstance& inst, const DecideOptions& opts) {
    std::vector<Vertex> X_check;
    validate_separation(inst.graph, inst.part1, inst.part2, X_check);
    if (X_check != [&] {
            auto x = inst.X;
            std::sort(x.begin(), x.end());
            return x;
        }())
        throw CoverError("X must equal the intersection of the parts");

    CutReductionReport rep;
    const Graph& g = inst.graph;
    std::vector<char> in2(g.n(), 0);
    for (Vertex v : inst.part2)
        in2[v] = 1;
    std::vector<char> inx(g.n(), 0);
    for (Vertex v : inst.X)
        inx[v] = 1;

    rep.f_prime = inst.f;
    rep.g_prime = inst.g;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in2[v]) {
            int drop = inx[v] ? inst.h[v] : 0;
            for (Vertex u : g.neighbors(v))
                if (inx[u])
                    drop += inst.h[u];
            rep.f_prime[v] = inst.f[v] - drop;
        }
        if (inx[v])
            rep.g_prime[v] = inst.g[v] - inst.h[v];
    }
    for (Vertex v : inst.part2)
        if (rep.f_prime[v] < 0 || rep.g_prime[v] > rep.f_prime[v])
            rep.vacuous = true;

    Subgraph g1 = induced_subgraph(g, inst.part1);
    PreceqQuery q1{g1.graph, map_into(inst.X, g1.to_host), restrict_quota(inst.f, g1.to_host),
                   restrict_quota(inst.g, g1.to_host), restrict_quota(inst.h, g1.to_host)};
    rep.premise_preceq = check_preceq(q1, opts);

    Subgraph g2 = induced_subgraph(g, inst.part2);
    if (rep.vacuous) {
        rep.premise_colorable.outcome = Outcome::False;
    } else {
        rep.premise_colorable = is_dp_colorable(g2.graph, restrict_quota(rep.f_prime, g2.to_host),
                                                restrict_quota(rep.g_prime, g2.to_host), opts);
    }
    rep.conclusion = is_dp_colorable(g, inst.f, inst.g, opts);
    rep.implication_holds =
        !(rep.premise_preceq.answer() && rep.premise_colorable.answer()) || rep.conclusion.answer();
    return rep;
}

} // namespace dplab
