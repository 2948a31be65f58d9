// Command-line front end: classify, analyze, rank2, batch, koszul.
//
// Exit codes: 0 success, 2 input error, 3 verification failure.

#include "kmk/error.hpp"
#include "kmk/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kInputError = 2;
constexpr int kVerificationFailure = 3;

int exit_code_for(kmk::ErrorCode c)
{
    switch (c) {
    case kmk::ErrorCode::NegativeMultiplicity:
    case kmk::ErrorCode::NotWeylInvariant:
    case kmk::ErrorCode::SurjectivityFailure:
        return kVerificationFailure;
    default:
        return kInputError;
    }
}

void emit(const kmk::Json& j, const std::string& out)
{
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw kmk::Error(kmk::ErrorCode::InvalidInput, "cannot write " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kac-Moody Koszul module engine"};
    app.require_subcommand(1);

    std::string file, out, dir;
    std::size_t node = 0, budget = kmk::kDefaultBudget, jobs = 0;
    bool explicit_koszul = false, cross_engine = false, timing = false;
    int a = 0, b = 0, height = 6;
    kmk::RandomCorpusOptions random;
    std::size_t random_count = 0;
    long max_q = -1;

    auto* classify = app.add_subcommand("classify", "Type classification of a diagram file");
    classify->add_option("file", file, "Diagram JSON {\"name\", \"matrix\"}")->required();

    auto* analyze = app.add_subcommand("analyze", "Full analysis of a (diagram, node) pair");
    analyze->add_option("file", file, "Diagram JSON")->required();
    analyze->add_option("--node", node, "Distinguished node")->required();
    analyze->add_flag("--explicit-koszul", explicit_koszul, "Decide nilpotency by an explicit Koszul rank");
    analyze->add_flag("--cross-engine", cross_engine, "Compare Lie-engine dimensions with the character route");
    analyze->add_option("--budget", budget, "Largest matrix (entries) for explicit computations");
    analyze->add_flag("--timing", timing, "Include wall-clock timings");
    analyze->add_option("--out", out, "Write the report here instead of stdout");

    auto* rank2 = app.add_subcommand("rank2", "Roots of [[2,-a],[-b,2]]");
    rank2->add_option("--a", a)->required();
    rank2->add_option("--b", b)->required();
    rank2->add_option("--height", height, "Largest root height listed");

    auto* batch = app.add_subcommand("batch", "Verify every theorem on a corpus of pairs");
    batch->add_option("dir", dir, "Directory of diagram files");
    batch->add_option("--random", random_count, "Number of random admissible pairs");
    batch->add_option("--rank", random.max_rank, "Largest random rank");
    batch->add_option("--min-entry", random.min_entry, "Smallest off-diagonal entry");
    batch->add_option("--seed", random.seed, "Generator seed");
    batch->add_option("--budget", budget, "Largest matrix (entries) for explicit computations");
    batch->add_option("--jobs", jobs, "Worker threads (0: all cores)");
    batch->add_flag("--timing", timing, "Include wall-clock timings");
    batch->add_option("--out", out, "Write the reports here instead of stdout");

    auto* koszul = app.add_subcommand("koszul", "Graded dimensions of a generic Koszul module");
    koszul->add_option("--input", file, "JSON {\"n\", \"kernel_rows\"}")->required();
    koszul->add_option("--max-q", max_q, "Largest degree (default n - 3)");
    koszul->add_option("--budget", budget, "Largest matrix (entries)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*classify) {
            emit(kmk::classify_report(kmk::load_diagram(file)), out);
            return 0;
        }
        if (*analyze) {
            kmk::AnalyzeOptions opt;
            opt.node = node;
            opt.explicit_koszul = explicit_koszul;
            opt.cross_engine = cross_engine;
            opt.budget = budget;
            opt.timing = timing;
            const kmk::AnalysisReport r = kmk::analyze(kmk::load_diagram(file), opt);
            emit(r.body, out);
            if (r.disagreement || !r.all_held) {
                std::cerr << "verification failure\n";
                return kVerificationFailure;
            }
            return 0;
        }
        if (*rank2) {
            const kmk::Json r = kmk::rank2_report(a, b, height);
            emit(r, out);
            return r["engines_agree"].get<bool>() ? 0 : kVerificationFailure;
        }
        if (*batch) {
            std::vector<kmk::DiagramFile> corpus;
            if (!dir.empty() && random_count > 0)
                throw kmk::Error(kmk::ErrorCode::InvalidInput, "give either a directory or --random, not both");
            if (!dir.empty()) {
                corpus = kmk::directory_corpus(dir);
            } else if (random_count > 0) {
                random.count = random_count;
                corpus = kmk::random_corpus(random);
            } else {
                throw kmk::Error(kmk::ErrorCode::InvalidInput, "batch needs a directory or --random N");
            }
            kmk::BatchOptions opt;
            opt.budget = budget;
            opt.jobs = jobs;
            opt.timing = timing;
            const kmk::BatchResult r = kmk::run_batch(corpus, opt);
            emit(r.body, out);
            const auto& summary = r.body["summary"];
            std::cerr << "pairs " << summary["pairs"] << ", nilpotent " << summary["nilpotent"]
                      << ", all theorems held: " << (r.all_held ? "yes" : "no") << "\n";
            return r.all_held ? 0 : kVerificationFailure;
        }
        if (*koszul) {
            std::ifstream in(file);
            if (!in)
                throw kmk::Error(kmk::ErrorCode::InvalidInput, "cannot open " + file);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw kmk::Error(kmk::ErrorCode::InvalidInput, file + ": " + e.what());
            }
            const kmk::KoszulInput k = kmk::parse_koszul_input(j);
            const std::size_t q = max_q >= 0 ? static_cast<std::size_t>(max_q) : (k.n >= 3 ? k.n - 3 : 0);
            emit(kmk::koszul_report(k, q, budget), out);
            return 0;
        }
    } catch (const kmk::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
    return 0;
}
