#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dplab/decide.hpp"
#include "dplab/discharge.hpp"
#include "dplab/oracle.hpp"
#include "dplab/registry.hpp"

using namespace dplab;
using njson = nlohmann::ordered_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const njson& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

QuotaMap parse_quota(const std::string& spec, int n, const char* what) {
    if (spec.rfind("uniform:", 0) == 0) {
        int k = std::stoi(spec.substr(8));
        return uniform_quota(n, k);
    }
    nlohmann::json doc = nlohmann::json::parse(slurp(spec));
    QuotaMap q = doc.get<QuotaMap>();
    if (static_cast<int>(q.size()) != n)
        throw std::runtime_error(std::string(what) + " file must list one value per vertex");
    return q;
}

struct CommonOpts {
    int m = 1;
    uint64_t cap = 100'000'000ULL;
    uint64_t sample = 0; // 0 = exhaustive
    uint64_t seed = 0;
    std::string shard;
    std::string out;
    int jobs = 0;
    bool stable_output = false;

    DecideOptions decide() const {
        DecideOptions d;
        d.cover_cap = cap;
        d.workers = jobs;
        d.seed = seed;
        if (sample > 0) {
            d.sample = true;
            d.sample_count = sample;
        }
        if (!shard.empty()) {
            auto slash = shard.find('/');
            if (slash == std::string::npos)
                throw CLI::ValidationError("--shard", "expected i/t");
            uint64_t idx = std::stoull(shard.substr(0, slash));
            uint64_t total = std::stoull(shard.substr(slash + 1));
            if (total == 0 || idx >= total)
                throw CLI::ValidationError("--shard", "need index < total");
            d.shard = {idx, total};
        }
        return d;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_m = true) {
    if (with_m)
        cmd->add_option("--m", o.m, "scale factor m (quotas are templates times m)")
            ->check(CLI::PositiveNumber);
    cmd->add_option("--cap", o.cap, "exhaustive cover-space cap");
    cmd->add_option("--sample", o.sample, "statistical mode with this many sampled covers");
    cmd->add_option("--seed", o.seed, "seed for all randomness");
    cmd->add_option("--shard", o.shard, "shard spec i/t over the enumeration range");
    cmd->add_option("--out", o.out, "write the report to this path instead of stdout");
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
    cmd->add_flag("--stable-output", o.stable_output, "zero out timing fields in reports");
}

njson graph_summary(const Graph& g) {
    return njson{{"n", g.n()}, {"m", g.edge_count()}};
}

int cmd_class_check(const std::string& graph_path, const std::string& out) {
    Graph g = parse_edge_list(slurp(graph_path));
    njson rep;
    rep["schema_version"] = 1;
    rep["command"] = "class-check";
    rep["graph"] = graph_summary(g);
    bool bad = false;
    if (has_triangle(g)) {
        bad = true;
        for (auto [u, v] : g.edges()) {
            bool done = false;
            for (Vertex w : g.neighbors(u)) {
                if (w != v && g.has_edge(w, v)) {
                    rep["triangle"] = {u, v, w};
                    done = true;
                    break;
                }
            }
            if (done)
                break;
        }
    } else {
        rep["triangle"] = nullptr;
    }
    if (auto w = find_normally_adjacent_c4(g)) {
        bad = true;
        rep["normally_adjacent_c4"] = {
            {"first", w->first}, {"second", w->second}, {"shared_edge", {w->shared_edge.first, w->shared_edge.second}}};
    } else {
        rep["normally_adjacent_c4"] = nullptr;
    }
    rep["in_class"] = !bad;
    emit(rep, out);
    return bad ? kExitFalse : kExitTrue;
}

int cmd_dp_check(const std::string& graph_path, const std::string& f_spec,
                 const std::string& g_spec, const CommonOpts& o) {
    Graph g = parse_edge_list(slurp(graph_path));
    QuotaMap f = scale_quota(parse_quota(f_spec, g.n(), "f"), o.m);
    QuotaMap gq = scale_quota(parse_quota(g_spec, g.n(), "g"), o.m);
    Verdict v = is_dp_colorable(g, f, gq, o.decide());
    njson rep;
    rep["schema_version"] = 1;
    rep["command"] = "dp-check";
    rep["graph"] = graph_summary(g);
    rep["query"] = {{"f", f}, {"g", gq}};
    rep["verdict"] = verdict_to_json(v);
    emit(rep, o.out);
    if (v.outcome == Outcome::CoverCapExceeded || v.outcome == Outcome::NodeCapExceeded)
        return kExitCap;
    return v.answer() ? kExitTrue : kExitFalse;
}

int cmd_solve(const std::string& graph_path, const std::string& cover_path, bool identity,
              bool random_cover, bool force, const CommonOpts& o) {
    Graph g = parse_edge_list(slurp(graph_path));
    if (!force) {
        if (has_triangle(g))
            throw std::runtime_error("graph contains a triangle; rerun with --force to solve anyway");
        if (find_normally_adjacent_c4(g))
            throw std::runtime_error(
                "graph contains normally adjacent 4-cycles; rerun with --force to solve anyway");
    }
    QuotaMap f = uniform_quota(g.n(), 7 * o.m);
    Cover cover;
    if (!cover_path.empty()) {
        cover = read_cover(g, slurp(cover_path));
        for (Vertex v = 0; v < g.n(); ++v)
            if (cover.list_size[v] != 7 * o.m)
                throw std::runtime_error("cover file is not a 7m-cover at m=" + std::to_string(o.m));
    } else if (random_cover) {
        cover = sample_cover_at(g, f, o.seed, 0);
    } else if (identity) {
        cover = identity_cover(g, f);
    } else {
        throw CLI::ValidationError("solve", "need one of --cover/--identity/--random");
    }
    SolveResult r = solve_cover(cover, uniform_quota(g.n(), 2 * o.m));
    njson rep;
    rep["schema_version"] = 1;
    rep["command"] = "solve";
    rep["graph"] = graph_summary(g);
    rep["m"] = o.m;
    rep["nodes"] = r.nodes;
    if (r.coloring) {
        rep["coloring"] = r.coloring->to_lists();
        emit(rep, o.out);
        return kExitTrue;
    }
    rep["coloring"] = nullptr;
    rep["note"] = r.hit_node_cap
                      ? "node cap reached before a verdict"
                      : "no (7m,2m)-coloring for this cover; for graphs in the class this "
                        "contradicts the theorem and should be treated as a bug alarm";
    emit(rep, o.out);
    return r.hit_node_cap ? kExitCap : kExitFalse;
}

int cmd_verify(const std::string& registry_path, const std::string& id, bool all, uint64_t budget,
               bool no_fallback, const CommonOpts& o) {
    auto entries = load_registry(registry_path.empty() ? default_registry_path() : registry_path);
    VerifyOptions vo;
    vo.decide = o.decide();
    vo.decide.sample = false;
    vo.allow_statistical = !no_fallback;
    if (o.sample > 0)
        vo.sample_count = o.sample;
    std::vector<RegistryEntry> chosen;
    if (all) {
        chosen = entries;
    } else {
        if (id.empty())
            throw CLI::ValidationError("verify", "need --all or --id");
        chosen.push_back(find_entry(entries, id));
    }
    SummaryReport sum = verify_all(chosen, o.m, vo, budget);
    njson rep = summary_to_json(sum, o.stable_output);
    rep["command"] = "verify";
    emit(rep, o.out);
    bool ok = sum.all_exhaustive_true && !sum.any_false;
    return ok ? kExitTrue : kExitFalse;
}

int cmd_discharge(const std::string& rotation_path, const std::string& out) {
    PlaneGraph pg = read_rotation_system(slurp(rotation_path));
    DischargeReport rep = final_report(pg);
    njson doc = ledger_to_json(pg, rep);
    doc["command"] = "discharge";
    auto hits = check_structural_predicates(pg);
    auto& hj = doc["structural_predicate_hits"] = njson::array();
    for (const auto& h : hits)
        hj.push_back({{"lemma", h.lemma}, {"detail", h.detail}});
    emit(doc, out);
    return kExitTrue;
}

int cmd_oracle(int max_n, int max_f, const CommonOpts& o) {
    auto res = oracle::cross_check_small_graphs(max_n, max_f, o.jobs);
    njson rep;
    rep["schema_version"] = 1;
    rep["command"] = "oracle";
    rep["max_n"] = max_n;
    rep["max_f"] = max_f;
    rep["instances"] = res.instances;
    auto& mm = rep["mismatches"] = njson::array();
    for (const auto& m : res.mismatches)
        mm.push_back(m.description);
    emit(rep, o.out);
    return res.mismatches.empty() ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DP-coloring verification laboratory"};
    app.require_subcommand(1);

    std::string graph_path, f_spec = "uniform:7", g_spec = "uniform:2";
    std::string cover_path, registry_path, id, out_only, rotation_path;
    bool identity = false, random_cover = false, force = false, all = false, no_fallback = false;
    uint64_t budget = UINT64_MAX;
    int max_n = 4, max_f = 3;
    CommonOpts dp_opts, solve_opts, verify_opts, oracle_opts;

    auto* cc = app.add_subcommand("class-check",
                                  "triangle and normally-adjacent-4-cycle witnesses");
    cc->add_option("graph", graph_path, "edge-list file")->required();
    cc->add_option("--out", out_only, "write the report to this path");

    auto* dp = app.add_subcommand("dp-check", "decide (f,g)-DP-colorability");
    dp->add_option("graph", graph_path, "edge-list file")->required();
    dp->add_option("--f", f_spec, "f quotas: uniform:K or a JSON array file");
    dp->add_option("--g", g_spec, "g quotas: uniform:K or a JSON array file");
    add_common(dp, dp_opts);

    auto* sv = app.add_subcommand("solve", "find a (7m,2m)-coloring for one cover");
    sv->add_option("graph", graph_path, "edge-list file")->required();
    sv->add_option("--cover", cover_path, "cover file");
    sv->add_flag("--identity", identity, "use the identity cover");
    sv->add_flag("--random", random_cover, "use a random cover drawn from --seed");
    sv->add_flag("--force", force, "skip the class membership check");
    add_common(sv, solve_opts);

    auto* vf = app.add_subcommand("verify", "verify registry configurations");
    vf->add_flag("--all", all, "verify every entry");
    vf->add_option("--id", id, "verify a single entry");
    vf->add_option("--registry", registry_path, "registry file path");
    vf->add_option("--budget", budget, "verify at most this many entries, skip the rest");
    vf->add_flag("--no-sample-fallback", no_fallback,
                 "fail entries over the cap instead of sampling");
    add_common(vf, verify_opts);

    auto* dc = app.add_subcommand("discharge", "run the discharging rules on a plane graph");
    dc->add_option("rotation", rotation_path, "rotation-system JSON file")->required();
    dc->add_option("--out", out_only, "write the ledger to this path");

    auto* orc = app.add_subcommand("oracle", "naive brute-force cross-check suite");
    orc->add_option("--max-n", max_n, "largest graph size");
    orc->add_option("--max-f", max_f, "largest list size");
    add_common(orc, oracle_opts, /*with_m=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cc->parsed())
            return cmd_class_check(graph_path, out_only);
        if (dp->parsed())
            return cmd_dp_check(graph_path, f_spec, g_spec, dp_opts);
        if (sv->parsed())
            return cmd_solve(graph_path, cover_path, identity, random_cover, force, solve_opts);
        if (vf->parsed())
            return cmd_verify(registry_path, id, all, budget, no_fallback, verify_opts);
        if (dc->parsed())
            return cmd_discharge(rotation_path, out_only);
        if (orc->parsed())
            return cmd_oracle(max_n, max_f, oracle_opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PlaneError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DischargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RegistryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CoverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
