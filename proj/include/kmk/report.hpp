// JSON input parsing and the reports behind the command-line tool.
//
// Every report is an ordered JSON object so that identical inputs give
// byte-identical output. Wall-clock timings are only included on request.

#pragma once

#include "kmk/charring.hpp"
#include "kmk/gcm.hpp"
#include "kmk/grading.hpp"
#include "kmk/koszul.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kmk {

using Json = nlohmann::ordered_json;

struct DiagramFile {
    std::string name;
    GeneralizedCartanMatrix matrix;
    std::optional<std::size_t> node;  // optional "node" key, used by batch
};

/// Throws Error(InvalidInput) or the GCM axiom errors.
DiagramFile parse_diagram(const nlohmann::json& j);
DiagramFile load_diagram(const std::filesystem::path& path);

KoszulInput parse_koszul_input(const nlohmann::json& j);

Json to_json(const Weight& w);
Json to_json(const RootVector& v);
Json to_json(const Character& c);
Json to_json(const TypeClassification& t);
Json to_json(const KostantComponent& c);
Json to_json(const RationalMatrix& m);  // rows of "p/q" strings

struct AnalyzeOptions {
    std::size_t node = 0;
    bool explicit_koszul = false;
    /// Explicit verdict only for dim g_1 up to this bound.
    std::size_t explicit_max_dim = SIZE_MAX;
    /// Run the Lie engine and compare dimensions with the character route.
    bool cross_engine = false;
    std::size_t cross_engine_max_dim = SIZE_MAX;
    std::size_t cross_engine_max_rank = SIZE_MAX;
    /// Bounds both the bracket matrix and the Koszul composite (entries).
    std::size_t budget = kDefaultBudget;
    bool timing = false;
};

struct AnalysisReport {
    Json body;
    bool admissible = false;
    /// Decided verdicts disagree: fatal.
    bool disagreement = false;
    /// Every executable check on this pair held.
    bool all_held = true;
    bool nilpotent = false;
    std::size_t dim_g1 = 0;
    std::optional<bool> explicit_verdict;
    bool cross_engine_run = false;
};

/// Never throws for non-admissible pairs (the report says so); internal
/// consistency failures are recorded in the report rather than thrown.
AnalysisReport analyze(const DiagramFile& d, const AnalyzeOptions& opt);

Json classify_report(const DiagramFile& d);

/// Rank-2 exploration of [[2, -a], [-b, 2]].
Json rank2_report(int a, int b, int height);

struct RandomCorpusOptions {
    std::size_t count = 100;
    std::size_t max_rank = 3;
    int min_entry = -3;
    std::uint64_t seed = 1;
};

/// Seeded random admissible pairs (node 0), rank uniform in [2, max_rank].
std::vector<DiagramFile> random_corpus(const RandomCorpusOptions& opt);

/// All *.json diagram files of a directory, sorted by file name; one pair per
/// node (or only the declared node).
std::vector<DiagramFile> directory_corpus(const std::filesystem::path& dir);

struct BatchOptions {
    std::size_t budget = kDefaultBudget;
    /// Explicit Koszul verdict for pairs with dim g_1 up to this bound.
    std::size_t explicit_max_dim = 6;
    /// Lie-engine cross-check for pairs of rank <= 3 and dim g_1 up to this bound.
    std::size_t cross_engine_max_dim = 20;
    std::size_t cross_engine_max_rank = 3;
    std::size_t jobs = 0;  // 0: hardware concurrency
    bool timing = false;
};

struct BatchResult {
    Json body;  // {"reports": [...], "summary": {...}}
    std::vector<AnalysisReport> reports;
    bool all_held = true;
};

BatchResult run_batch(const std::vector<DiagramFile>& corpus, const BatchOptions& opt);

Json koszul_report(const KoszulInput& in, std::size_t max_q, std::size_t budget);

}  // namespace kmk
