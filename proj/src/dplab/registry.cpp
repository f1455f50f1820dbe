#include "dplab/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dplab {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw RegistryError("cannot open registry file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int girth(const Graph& g) {
    int best = INT32_MAX;
    for (Vertex s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), par(g.n(), -1);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex v = queue[qi];
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    queue.push_back(w);
                } else if (w != par[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

void run_crosschecks(const RegistryEntry& e) {
    for (const auto& chk : e.crosschecks) {
        std::string kind = chk.at("kind").get<std::string>();
        auto fail = [&](const std::string& why) {
            throw RegistryError("registry entry \"" + e.id + "\": cross-check \"" + kind +
                                "\" failed: " + why);
        };
        if (kind == "note")
            continue;
        if (kind == "degree_formula") {
            if (!e.total_degree)
                fail("entry has no total_degree labels");
            const auto& lab = *e.total_degree;
            if (static_cast<int>(lab.size()) != e.graph.n())
                fail("label count != vertex count");
            for (Vertex v = 0; v < e.graph.n(); ++v) {
                int excess = lab[v] - e.graph.degree(v);
                if (excess < 0)
                    fail("label below configuration degree at vertex " + std::to_string(v));
                int expect = 7 - 2 * excess;
                if (e.claim.f[v] != expect)
                    fail("f mismatch at vertex " + std::to_string(v) + ": labels give " +
                         std::to_string(expect) + ", claim has " + std::to_string(e.claim.f[v]));
            }
        } else if (kind == "induced_path") {
            auto vs = chk.at("vertices").get<std::vector<Vertex>>();
            for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j) {
                    bool want = (j == i + 1);
                    if (e.graph.has_edge(vs[i], vs[j]) != want)
                        fail("vertices do not induce the stated path");
                }
        } else if (kind == "cut_quota") {
            auto X = chk.at("X").get<std::vector<Vertex>>();
            int h = chk.at("h").get<int>();
            auto rest = chk.at("rest").get<std::vector<Vertex>>();
            auto expect = chk.at("expect").get<std::vector<int>>();
            if (rest.size() != expect.size())
                fail("rest/expect size mismatch");
            for (size_t i = 0; i < rest.size(); ++i) {
                Vertex v = rest[i];
                int drop = 0;
                for (Vertex x : X)
                    if (x == v || e.graph.has_edge(x, v))
                        drop += h;
                if (e.claim.f[v] - drop != expect[i])
                    fail("cut-reduction quota mismatch at vertex " + std::to_string(v));
            }
        } else if (kind == "saturated_removal") {
            auto ev = chk.at("edge").get<std::vector<Vertex>>();
            Vertex at = chk.at("at").get<Vertex>();
            int expect = chk.at("expect").get<int>();
            if (!e.graph.has_edge(ev[0], ev[1]))
                fail("edge not present");
            int got = e.claim.f[at] - std::min(e.claim.f[ev[0]], e.claim.f[ev[1]]);
            if (got != expect)
                fail("list size after saturated matching removal mismatch");
        } else if (kind == "edge_count") {
            if (e.graph.edge_count() != chk.at("count").get<int>())
                fail("edge count mismatch");
        } else if (kind == "girth_at_least") {
            if (girth(e.graph) < chk.at("value").get<int>())
                fail("graph has a shorter cycle");
        } else if (kind == "f_values") {
            if (e.claim.f != chk.at("expect").get<QuotaMap>())
                fail("claim f differs from figure transcription");
        } else {
            fail("unknown cross-check kind");
        }
    }
}

} // namespace

std::string default_registry_path() {
    if (const char* env = std::getenv("DPLAB_REGISTRY"))
        return env;
    std::ifstream probe("data/registry.json");
    if (probe)
        return "data/registry.json";
#ifdef DPLAB_SOURCE_DIR
    return std::string(DPLAB_SOURCE_DIR) + "/data/registry.json";
#else
    return "data/registry.json";
#endif
}

std::vector<RegistryEntry> load_registry(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& ex) {
        throw RegistryError(std::string("registry parse error: ") + ex.what());
    }
    std::vector<RegistryEntry> out;
    for (const auto& j : doc) {
        RegistryEntry e;
        e.id = j.at("id").get<std::string>();
        e.source = j.value("source", std::string{});
        e.note = j.value("note", std::string{});
        int n = j.at("n").get<int>();
        std::vector<Edge> es;
        for (const auto& ed : j.at("edges"))
            es.emplace_back(ed[0].get<int>(), ed[1].get<int>());
        e.graph = Graph(n, es);
        if (j.contains("total_degree"))
            e.total_degree = j["total_degree"].get<std::vector<int>>();
        const auto& cj = j.at("claim");
        std::string kind = cj.at("kind").get<std::string>();
        if (kind == "dp-colorable")
            e.claim.kind = RegistryClaim::DpColorable;
        else if (kind == "preceq")
            e.claim.kind = RegistryClaim::Preceq;
        else
            throw RegistryError("entry \"" + e.id + "\": unknown claim kind " + kind);
        e.claim.f = cj.at("f").get<QuotaMap>();
        e.claim.g = cj.at("g").get<QuotaMap>();
        if (e.claim.kind == RegistryClaim::Preceq) {
            e.claim.h = cj.at("h").get<QuotaMap>();
            e.claim.X = cj.at("X").get<std::vector<Vertex>>();
        }
        if (static_cast<int>(e.claim.f.size()) != n || static_cast<int>(e.claim.g.size()) != n)
            throw RegistryError("entry \"" + e.id + "\": quota size mismatch");
        if (!quota_leq(e.claim.g, e.claim.f))
            throw RegistryError("entry \"" + e.id + "\": claim needs g <= f");
        if (j.contains("crosschecks"))
            e.crosschecks = j["crosschecks"];
        run_crosschecks(e);
        out.push_back(std::move(e));
    }
    return out;
}

const RegistryEntry& find_entry(const std::vector<RegistryEntry>& entries, const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id)
            return e;
    throw RegistryError("no registry entry with id \"" + id + "\"");
}

std::optional<uint64_t> RegistryEntry::space_size(int m) const {
    CoverSpace space(graph, scale_quota(claim.f, m));
    return space.size();
}

EntryReport verify_entry(const RegistryEntry& entry, int m, const VerifyOptions& opts) {
    if (m < 1)
        throw RegistryError("m must be a positive integer");
    EntryReport rep;
    rep.id = entry.id;
    rep.m = m;
    auto t0 = std::chrono::steady_clock::now();

    DecideOptions dopts = opts.decide;
    dopts.sample = false;
    auto size = entry.space_size(m);
    bool exhaustive = size && *size <= dopts.cover_cap;
    if (!exhaustive) {
        if (!opts.allow_statistical) {
            rep.mode = "cap-exceeded";
            rep.verdict.outcome = Outcome::CoverCapExceeded;
            rep.verdict.space_size = size.value_or(0);
            rep.verdict.space_overflow = !size.has_value();
            return rep;
        }
        dopts.sample = true;
        dopts.sample_count = opts.sample_count;
    }
    rep.mode = exhaustive ? "exhaustive" : "statistical";

    QuotaMap f = scale_quota(entry.claim.f, m);
    QuotaMap g = scale_quota(entry.claim.g, m);
    if (entry.claim.kind == RegistryClaim::DpColorable) {
        rep.verdict = is_dp_colorable(entry.graph, f, g, dopts);
    } else {
        PreceqQuery q{entry.graph, entry.claim.X, f, g, scale_quota(entry.claim.h, m)};
        rep.verdict = check_preceq(q, dopts);
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

SummaryReport verify_all(const std::vector<RegistryEntry>& entries, int m,
                         const VerifyOptions& opts, uint64_t budget) {
    SummaryReport sum;
    uint64_t ran = 0;
    for (const auto& e : entries) {
        if (ran >= budget) {
            EntryReport rep;
            rep.id = e.id;
            rep.m = m;
            rep.mode = "skipped";
            sum.entries.push_back(std::move(rep));
            continue;
        }
        ++ran;
        EntryReport rep = verify_entry(e, m, opts);
        if (!rep.verdict.answer() && rep.mode == "exhaustive")
            sum.all_exhaustive_true = false;
        if (rep.verdict.outcome == Outcome::False)
            sum.any_false = true;
        sum.entries.push_back(std::move(rep));
    }
    return sum;
}

nlohmann::ordered_json entry_report_to_json(const EntryReport& r, bool stable_output) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["m"] = r.m;
    j["mode"] = r.mode;
    j["verdict"] = verdict_to_json(r.verdict);
    j["time_ms"] = stable_output ? 0.0 : r.time_ms;
    return j;
}

nlohmann::ordered_json summary_to_json(const SummaryReport& s, bool stable_output) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["all_exhaustive_true"] = s.all_exhaustive_true;
    j["any_false"] = s.any_false;
    auto& arr = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& r : s.entries)
        arr.push_back(entry_report_to_json(r, stable_output));
    return j;
}

MutationReport mutation_test(const RegistryEntry& entry, int m, int trials, uint64_t seed,
                             const VerifyOptions& opts) {
    MutationReport rep;
    rep.id = entry.id;
    rep.m = m;
    // candidate perturbations: lower one f value by m; dropping below g is
    // allowed and refutes the claim outright
    std::vector<int> candidates;
    for (Vertex v = 0; v < entry.graph.n(); ++v)
        if (entry.claim.f[v] >= 1)
            candidates.push_back(v);
    // deterministic subset when trials < candidates
    if (trials > 0 && static_cast<size_t>(trials) < candidates.size()) {
        std::vector<int> picked;
        uint64_t x = seed;
        std::vector<int> pool = candidates;
        for (int t = 0; t < trials; ++t) {
            x = split_seed(x, t);
            picked.push_back(pool[x % pool.size()]);
            pool.erase(pool.begin() + static_cast<long>(x % pool.size()));
        }
        std::sort(picked.begin(), picked.end());
        candidates = picked;
    }
    for (Vertex v : candidates) {
        RegistryEntry mut = entry;
        mut.claim.f[v] -= 1;
        if (mut.claim.f[v] < 0)
            continue;
        bool quota_broken = mut.claim.f[v] < mut.claim.g[v];
        MutationOutcome out;
        out.description = "f[" + std::to_string(v) + "] " + std::to_string(entry.claim.f[v]) +
                          "m -> " + std::to_string(mut.claim.f[v]) + "m";
        QuotaMap f = scale_quota(mut.claim.f, m);
        QuotaMap g = scale_quota(mut.claim.g, m);
        DecideOptions dopts = opts.decide;
        if (quota_broken) {
            // g > f somewhere: refuted by definition, no search needed
            out.verdict.outcome = Outcome::False;
            out.verdict.witness_cover = identity_cover(mut.graph, f);
            out.witness_replayed = true;
        } else if (mut.claim.kind == RegistryClaim::DpColorable) {
            out.verdict = is_dp_colorable(mut.graph, f, g, dopts);
            if (out.verdict.outcome == Outcome::False && out.verdict.witness_cover) {
                SolveResult r = solve_cover(*out.verdict.witness_cover, g, dopts.limits);
                out.witness_replayed = !r.coloring.has_value();
            }
        } else {
            PreceqQuery q{mut.graph, mut.claim.X, f, g, scale_quota(mut.claim.h, m)};
            out.verdict = check_preceq(q, dopts);
            if (out.verdict.outcome == Outcome::False && out.verdict.witness_cover)
                out.witness_replayed =
                    !preceq_holds_on_cover(q, *out.verdict.witness_cover, dopts.limits);
        }
        if (out.verdict.outcome == Outcome::False && out.witness_replayed)
            rep.found_false = true;
        rep.tried.push_back(std::move(out));
    }
    return rep;
}

} // namespace dplab
