#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dplab/decide.hpp"

namespace dplab {

struct RegistryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegistryClaim {
    enum Kind { DpColorable, Preceq } kind = DpColorable;
    QuotaMap f, g, h;      // templates at m=1; h only for Preceq
    std::vector<Vertex> X; // only for Preceq
};

// One configuration or lemma instance, bound to a machine-checkable claim.
// Figure-derived adjacency is data: entries live in data/registry.json with
// their cross-check facts alongside, so transcription slips fail loudly.
struct RegistryEntry {
    std::string id;
    std::string source;
    std::string note;
    Graph graph;
    std::optional<std::vector<int>> total_degree; // labels d_G(v) where known
    RegistryClaim claim;
    nlohmann::json crosschecks;

    // Cover-space size of the claim at scale m (nullopt on overflow).
    std::optional<uint64_t> space_size(int m) const;
};

std::string default_registry_path();
std::vector<RegistryEntry> load_registry(const std::string& path);
const RegistryEntry& find_entry(const std::vector<RegistryEntry>& entries, const std::string& id);

struct VerifyOptions {
    DecideOptions decide{};
    bool allow_statistical = true; // fall back to sampling above the cover cap
    uint64_t sample_count = 100'000;
};

struct EntryReport {
    std::string id;
    int m = 1;
    std::string mode; // exhaustive | statistical | cap-exceeded | skipped
    Verdict verdict;
    double time_ms = 0;

    bool ok() const { return verdict.answer() && (mode == "exhaustive" || mode == "statistical"); }
};

EntryReport verify_entry(const RegistryEntry& entry, int m, const VerifyOptions& opts = {});

struct SummaryReport {
    std::vector<EntryReport> entries;
    bool all_exhaustive_true = true; // no exhaustive entry refuted
    bool any_false = false;
};

// budget = how many entries to actually run; the rest are reported "skipped".
SummaryReport verify_all(const std::vector<RegistryEntry>& entries, int m,
                         const VerifyOptions& opts = {}, uint64_t budget = UINT64_MAX);

nlohmann::ordered_json entry_report_to_json(const EntryReport& r, bool stable_output = false);
nlohmann::ordered_json summary_to_json(const SummaryReport& s, bool stable_output = false);

struct MutationOutcome {
    std::string description;
    Verdict verdict;
    bool witness_replayed = false; // a False verdict re-verified on its witness
};

struct MutationReport {
    std::string id;
    int m = 1;
    std::vector<MutationOutcome> tried;
    bool found_false = false;
};

// Perturbs the claim below its threshold (single f decrements) and expects a
// refutation with a replayable witness for at least one perturbation.
MutationReport mutation_test(const RegistryEntry& entry, int m, int trials, uint64_t seed,
                             const VerifyOptions& opts = {});

} // namespace dplab
