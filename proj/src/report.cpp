#include "kmk/report.hpp"

#include "kmk/error.hpp"
#include "kmk/lieengine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace kmk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Json matrix_json(const GeneralizedCartanMatrix& m)
{
    Json rows = Json::array();
    for (const auto& row : m.entries())
        rows.push_back(row);
    return rows;
}

std::size_t choose2(std::size_t d) { return d * (d - 1) / 2; }

// Records named boolean checks and whether all of them held.
struct Checks {
    Json body = Json::object();
    bool all = true;

    void add(const std::string& name, bool ok)
    {
        body[name] = ok;
        all = all && ok;
    }
};

}  // namespace

DiagramFile parse_diagram(const nlohmann::json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::InvalidInput, "diagram file must be a JSON object");
    DiagramFile d;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw Error(ErrorCode::InvalidInput, "\"name\" must be a string");
        d.name = j["name"].get<std::string>();
    }
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw Error(ErrorCode::InvalidInput, "\"matrix\" must be an array of integer rows");
    IntMatrix a;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array())
            throw Error(ErrorCode::InvalidInput, "\"matrix\" must be an array of integer rows");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw Error(ErrorCode::InvalidInput, "matrix entries must be integers");
            r.push_back(x.get<int>());
        }
        a.push_back(std::move(r));
    }
    d.matrix = GeneralizedCartanMatrix::validate(std::move(a));
    if (j.contains("node")) {
        if (!j["node"].is_number_unsigned() || j["node"].get<std::size_t>() >= d.matrix.size())
            throw Error(ErrorCode::InvalidInput, "\"node\" must be a valid node index");
        d.node = j["node"].get<std::size_t>();
    }
    return d;
}

namespace {

nlohmann::json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, path.string() + ": " + e.what());
    }
}

}  // namespace

DiagramFile load_diagram(const std::filesystem::path& path) { return parse_diagram(read_json(path)); }

KoszulInput parse_koszul_input(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw Error(ErrorCode::InvalidInput, "koszul input needs a nonnegative integer \"n\"");
    const std::size_t n = j["n"].get<std::size_t>();
    std::vector<std::vector<Rational>> rows;
    if (j.contains("kernel_rows")) {
        if (!j["kernel_rows"].is_array())
            throw Error(ErrorCode::InvalidInput, "\"kernel_rows\" must be an array of rows");
        for (const auto& row : j["kernel_rows"]) {
            if (!row.is_array())
                throw Error(ErrorCode::InvalidInput, "\"kernel_rows\" must be an array of rows");
            std::vector<Rational> r;
            for (const auto& x : row) {
                if (x.is_string())
                    r.push_back(parse_rational(x.get<std::string>()));
                else if (x.is_number_integer())
                    r.emplace_back(x.get<long>());
                else
                    throw Error(ErrorCode::InvalidInput, "kernel entries must be rational strings");
            }
            rows.push_back(std::move(r));
        }
    }
    const std::size_t width = n * (n - (n > 0 ? 1 : 0)) / 2;
    RationalMatrix m(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width)
            throw Error(ErrorCode::InvalidInput, "kernel row " + std::to_string(r) + " has length " +
                                                     std::to_string(rows[r].size()) + ", expected " +
                                                     std::to_string(width));
        for (std::size_t c = 0; c < width; ++c)
            m(r, c) = rows[r][c];
    }
    return make_koszul_input(n, m);
}

Json to_json(const Weight& w) { return w.coords; }

Json to_json(const RootVector& v) { return v.coeffs; }

Json to_json(const Character& c)
{
    Json out = Json::array();
    for (const auto& [w, m] : c.constituents)
        out.push_back(Json{{"weight", w.coords}, {"mult", m}});
    return out;
}

Json to_json(const TypeClassification& t)
{
    Json out = Json::object();
    if (t.components.size() == 1) {
        out["kind"] = to_string(t.components[0].kind);
        if (t.components[0].name_hint)
            out["name_hint"] = *t.components[0].name_hint;
    }
    Json comps = Json::array();
    for (const auto& c : t.components) {
        Json jc = {{"nodes", c.nodes},
                   {"kind", to_string(c.kind)},
                   {"hyperbolic", c.hyperbolic},
                   {"det", integer_json(c.det)},
                   {"corank", c.corank}};
        if (c.name_hint)
            jc["name_hint"] = *c.name_hint;
        comps.push_back(std::move(jc));
    }
    out["components"] = std::move(comps);
    out["corank"] = t.corank;
    out["realization_dim"] = t.realization_dim;
    return out;
}

Json to_json(const KostantComponent& c)
{
    Json phi = Json::array();
    for (const auto& r : c.phi)
        phi.push_back(r.coeffs);
    return Json{{"word", c.word.letters}, {"phi", std::move(phi)}, {"weight", c.weight.coords}, {"degree", c.degree}};
}

Json to_json(const RationalMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json classify_report(const DiagramFile& d)
{
    Json out = {{"name", d.name}, {"matrix", matrix_json(d.matrix)}};
    out["classification"] = to_json(classify(d.matrix));
    out["symmetrizable"] = is_symmetrizable(d.matrix);
    Json arrows = Json::array();
    for (const auto& a : to_diagram(d.matrix).arrows)
        arrows.push_back(Json{{"source", a.source}, {"target", a.target}, {"multiplicity", a.multiplicity}});
    out["arrows"] = std::move(arrows);
    return out;
}

AnalysisReport analyze(const DiagramFile& d, const AnalyzeOptions& opt)
{
    if (opt.node >= d.matrix.size())
        throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(opt.node));

    AnalysisReport rep;
    Json& body = rep.body;
    body["input"] = Json{{"name", d.name}, {"matrix", matrix_json(d.matrix)}, {"node", opt.node}};
    body["classification"] = to_json(classify(d.matrix));

    AdmissiblePair pair;
    try {
        pair = admissible(d.matrix, opt.node);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAdmissible)
            throw;
        body["admissible"] = false;
        body["reason"] = e.what();
        return rep;
    }
    rep.admissible = true;
    body["admissible"] = true;
    body["component"] = pair.component;
    body["ignored_components"] = pair.ignored_components;

    Checks checks;
    Json timing = Json::object();
    const auto t_char = Clock::now();
    const GradedSetup s = setup(pair);
    const RootSystem& rs = s.level0;

    Json level0 = Json::array();
    for (const auto& c : pair.residual.components) {
        std::vector<std::size_t> nodes;
        for (std::size_t v : c.nodes)
            nodes.push_back(pair.component[v]);
        Json jc = {{"nodes", nodes}};
        if (c.name_hint)
            jc["name"] = *c.name_hint;
        level0.push_back(std::move(jc));
    }
    body["level0"] = Json{{"components", std::move(level0)}, {"abelian_rank", s.abelian_rank}};
    body["fact_weight"] = s.fact_weight.coords;
    body["lambda"] = s.lambda.coords;

    const bool thm1 = thm1_criterion(pair);
    const std::int64_t dim1 = weyl_dim(rs, s.lambda);
    rep.dim_g1 = static_cast<std::size_t>(dim1);
    body["g1"] = Json{{"dim", dim1}, {"character", to_json(irreducible(s.lambda))}};

    LevelReport level2;
    Character kernel, kmax, wedge;
    std::vector<KostantComponent> h1, h2;
    bool ps = false;
    try {
        wedge = exterior_square(rs, s.lambda);
        level2 = level_character(s, 2);
        kernel = kernel_character(s);
        h1 = kostant_h(s, 1);
        h2 = kostant_h(s, 2);
        ps = ps_nilpotency(s);
        kmax = kmax_character(s);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NegativeMultiplicity)
            throw;
        body["error"] = e.what();
        checks.add("character_route_consistent", false);
        body["checks"] = checks.body;
        rep.all_held = false;
        return rep;
    }
    checks.add("character_route_consistent", true);

    const std::int64_t dim_kernel = dimension(rs, kernel);
    body["wedge2_g1"] = Json{{"dim", dimension(rs, wedge)}, {"character", to_json(wedge)}};
    body["g2"] = Json{{"dim", level2.dim}, {"character", to_json(level2.character)}};
    body["kernel"] = Json{{"dim", dim_kernel}, {"character", to_json(kernel)}};

    Json kostant = Json::object();
    Json jh1 = Json::array(), jh2 = Json::array();
    for (const auto& c : h1)
        jh1.push_back(to_json(c));
    for (const auto& c : h2)
        jh2.push_back(to_json(c));
    body["kostant"] = Json{{"h1", std::move(jh1)}, {"h2", std::move(jh2)}};

    std::vector<std::size_t> kmax_roots;
    const Weight dual_lambda = rs.dual(s.lambda);
    for (std::size_t b = 0; b < rs.rank(); ++b)
        if (dual_lambda[b] > 0)
            kmax_roots.push_back(b);
    body["kmax"] = Json{{"character", to_json(kmax)}, {"surrogate_roots", kmax_surrogate(s)}};

    Json theorem_max = nullptr;
    bool max_ok = true;
    if (thm1) {
        max_ok = theorem_max_check(s);
        theorem_max = max_ok;
    }
    body["theorem_max"] = theorem_max;

    const BoundCheck bound = bound_check(s);
    body["bound"] = Json{{"lhs", bound.lhs}, {"rhs", bound.rhs}, {"applies", bound.applies}, {"holds", bound.holds}};
    if (opt.timing)
        timing["character_ms"] = ms_since(t_char);

    // Kostant sanity
    bool kostant_ok = h1.size() == 1 && h1[0].weight == s.fact_weight && h1[0].degree == 1;
    std::set<std::size_t> degree2_neighbors;
    for (const auto* list : {&h1, &h2})
        for (const auto& c : *list) {
            RootVector sum{std::vector<int>(pair.matrix.size(), 0)};
            for (const auto& r : c.phi)
                sum = sum + r;
            kostant_ok = kostant_ok && c.weight.is_dominant() && rho_shift(pair.matrix, c.word) == sum;
        }
    Character deg2;
    for (const auto& c : h2)
        if (c.degree == 2) {
            deg2.add(c.weight, 1);
            degree2_neighbors.insert(c.word.letters[0]);
        }
    std::set<std::size_t> simple_neighbors;
    for (std::size_t j = 1; j < pair.matrix.size(); ++j)
        if (pair.matrix(0, j) == -1)
            simple_neighbors.insert(j);
    checks.add("kostant_h1_is_dual_of_lambda", h1.size() == 1 && h1[0].weight == s.fact_weight);
    checks.add("kostant_components_well_formed", kostant_ok);
    checks.add("kostant_degree2_at_simple_neighbors", degree2_neighbors == simple_neighbors);
    checks.add("kernel_is_dual_of_h2", kernel == dualize(rs, deg2));
    checks.add("kernel_dim", dim_kernel == static_cast<std::int64_t>(choose2(rep.dim_g1)) - level2.dim);
    checks.add("kmax_occurrence", [&] {
        Character expected;
        for (std::size_t b : kmax_roots)
            expected.add(rs.dual(2 * dual_lambda - rs.simple_root(b)), 1);
        return expected == kmax;
    }());

    rep.nilpotent = thm1;
    if (thm1) {
        checks.add("theorem_max", max_ok);
        checks.add("bound", bound.holds);
        checks.add("kernel_lower_bound", dim_kernel >= 2 * dim1 - 3);
    }

    // explicit route
    const std::size_t rank = d.matrix.size();
    const bool want_explicit = opt.explicit_koszul && rep.dim_g1 <= opt.explicit_max_dim;
    const bool want_cross = opt.cross_engine && rep.dim_g1 <= opt.cross_engine_max_dim &&
                            rank <= opt.cross_engine_max_rank;
    Json explicit_verdict = "skipped";
    if (want_explicit || want_cross) {
        const std::size_t bracket_entries = choose2(rep.dim_g1) * static_cast<std::size_t>(level2.dim);
        if (bracket_entries > opt.budget) {
            body["lie_engine"] = Json{{"skipped", "bracket matrix exceeds budget"}};
        } else {
            const auto t_lie = Clock::now();
            std::optional<BracketData> bd;
            try {
                bd = bracket_matrix(pair);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SurjectivityFailure)
                    throw;
                body["lie_engine"] = Json{{"error", e.what()}};
                checks.add("bracket_surjective", false);
            }
            if (opt.timing)
                timing["lie_ms"] = ms_since(t_lie);
            if (bd) {
                rep.cross_engine_run = true;
                checks.add("bracket_surjective", true);
                WeightMultiset lie_weights;
                bool connected = true;
                for (const auto& e : bd->g1.entries)
                    ++lie_weights.entries[e.weight];
                for (const auto* lb : {&bd->g1, &bd->g2})
                    for (const auto& deg : lb->support)
                        connected = connected && support_connected(pair.matrix, deg.coeffs);
                const std::size_t g1 = bd->g1.entries.size();
                const std::size_t g2 = bd->g2.entries.size();
                body["lie_engine"] = Json{{"g1_dim", g1},
                                          {"g2_dim", g2},
                                          {"kernel_dim", bd->kernel.dim()},
                                          {"g1_degrees", bd->g1.support.size()},
                                          {"g2_degrees", bd->g2.support.size()},
                                          {"shell_degrees", bd->g1.shell.size() + bd->g2.shell.size()}};
                checks.add("cross_engine_g1", g1 == rep.dim_g1);
                checks.add("cross_engine_g2", static_cast<std::int64_t>(g2) == level2.dim);
                checks.add("cross_engine_kernel", static_cast<std::int64_t>(bd->kernel.dim()) == dim_kernel);
                checks.add("cross_engine_g1_weights", lie_weights == weight_multiplicities(rs, s.lambda));
                checks.add("root_support_connected", connected);

                if (want_explicit) {
                    const auto t_k = Clock::now();
                    const KoszulInput in = make_koszul_input(g1, bd->kernel.rows);
                    try {
                        const bool nil = is_nilpotent_explicit(in, opt.budget);
                        explicit_verdict = nil;
                        rep.explicit_verdict = nil;
                        Json k = Json{{"n", g1}, {"kernel_dim", in.kernel.dim()}, {"w0", graded_dim(in, 0)}};
                        if (g1 >= 3)
                            k["decisive"] = Json{{"q", g1 - 3}, {"dim", graded_dim(in, g1 - 3, opt.budget)}};
                        body["koszul"] = std::move(k);
                        checks.add("w0_is_g2", graded_dim(in, 0) == level2.dim);
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::DimensionOverflow)
                            throw;
                        body["koszul"] = Json{{"skipped", e.what()}};
                    }
                    if (opt.timing)
                        timing["koszul_ms"] = ms_since(t_k);
                }
            }
        }
    }

    body["verdicts"] = Json{{"thm1", thm1}, {"ps", ps}, {"explicit", explicit_verdict}};
    rep.disagreement = thm1 != ps || (rep.explicit_verdict && *rep.explicit_verdict != thm1);
    checks.add("verdicts_agree", !rep.disagreement);
    body["checks"] = checks.body;
    body["all_checks_held"] = checks.all;
    rep.all_held = checks.all;
    if (opt.timing)
        body["timing"] = std::move(timing);
    return rep;
}

Json rank2_report(int a, int b, int height)
{
    if (a < 0 || b < 0)
        throw Error(ErrorCode::InvalidInput, "a and b must be nonnegative");
    if (height < 1 || height > 40)
        throw Error(ErrorCode::InvalidInput, "height must lie in [1, 40]");
    const GeneralizedCartanMatrix m = GeneralizedCartanMatrix::validate({{2, -a}, {-b, 2}});
    const Symmetrization form = (a > 0 && b > 0) ? rank2_form(a, b) : symmetrize(m);

    Json out = {{"a", a}, {"b", b}, {"matrix", matrix_json(m)}};
    out["classification"] = to_json(classify(m));
    Json d = Json::array();
    for (const auto& x : form.d)
        d.push_back(integer_json(x));
    out["symmetrizer"] = std::move(d);

    TruncatedAlgebra alg(m);
    Json roots = Json::array();
    bool agree = true;
    std::size_t count = 0;
    for (int t = 1; t <= height; ++t)
        for (int x = 0; x <= t; ++x) {
            const RootVector v{{x, t - x}};
            const RootClass c = classify_root(m, form, v);
            const std::size_t dim = alg.dim(v);
            agree = agree && ((dim > 0) == (c != RootClass::NotRoot));
            if (c == RootClass::NotRoot)
                continue;
            ++count;
            roots.push_back(Json{{"degree", v.coeffs}, {"class", to_string(c)}, {"norm", to_string(norm(form, v))},
                                 {"lie_dim", dim}});
        }
    out["roots"] = std::move(roots);
    out["positive_root_count"] = count;
    out["engines_agree"] = agree;

    const RootVector delta{{2, 1}};
    out["probe"] = Json{{"degree", delta.coeffs},
                        {"lie_dim", alg.dim(delta)},
                        {"class", to_string(classify_root(m, form, delta))},
                        {"norm", to_string(norm(form, delta))},
                        {"formula_norm", 8 * b + 2 * a - 4 * a * b}};
    return out;
}

std::vector<DiagramFile> random_corpus(const RandomCorpusOptions& opt)
{
    if (opt.max_rank < 2)
        throw Error(ErrorCode::InvalidInput, "random rank bound must be at least 2");
    if (opt.min_entry > -1)
        throw Error(ErrorCode::InvalidInput, "minimum entry must be at most -1");
    std::mt19937_64 gen(opt.seed);
    auto uniform = [&](int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::vector<DiagramFile> out;
    for (std::size_t k = 0; k < opt.count; ++k) {
        for (std::size_t attempt = 0;; ++attempt) {
            if (attempt > 100000)
                throw Error(ErrorCode::InvalidInput, "no admissible pair found for these generator parameters");
            const std::size_t n = static_cast<std::size_t>(uniform(2, static_cast<int>(opt.max_rank)));
            IntMatrix a(n, std::vector<int>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                a[i][i] = 2;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    int v = uniform(opt.min_entry, 0);
                    if (i == 0 && gen() % 10 < 3)
                        v = -1;
                    if (v != 0) {
                        a[i][j] = v;
                        a[j][i] = uniform(opt.min_entry, -1);
                    }
                }
            GeneralizedCartanMatrix m = GeneralizedCartanMatrix::validate(std::move(a));
            try {
                admissible(m, 0);
            } catch (const Error&) {
                continue;
            }
            out.push_back({"random-" + std::to_string(k), std::move(m), 0});
            break;
        }
    }
    return out;
}

std::vector<DiagramFile> directory_corpus(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir))
        throw Error(ErrorCode::InvalidInput, dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<DiagramFile> out;
    for (const auto& f : files) {
        DiagramFile d = load_diagram(f);
        if (d.name.empty())
            d.name = f.stem().string();
        if (d.node) {
            out.push_back(std::move(d));
            continue;
        }
        for (std::size_t v = 0; v < d.matrix.size(); ++v) {
            DiagramFile copy = d;
            copy.node = v;
            out.push_back(std::move(copy));
        }
    }
    return out;
}

BatchResult run_batch(const std::vector<DiagramFile>& corpus, const BatchOptions& opt)
{
    BatchResult res;
    res.reports.resize(corpus.size());
    std::vector<std::string> failures(corpus.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) {
            AnalyzeOptions a;
            a.node = corpus[k].node.value_or(0);
            a.explicit_koszul = true;
            a.explicit_max_dim = opt.explicit_max_dim;
            a.cross_engine = true;
            a.cross_engine_max_dim = opt.cross_engine_max_dim;
            a.cross_engine_max_rank = opt.cross_engine_max_rank;
            a.budget = opt.budget;
            a.timing = opt.timing;
            try {
                res.reports[k] = analyze(corpus[k], a);
            } catch (const Error& e) {
                res.reports[k].body = Json{{"input", Json{{"name", corpus[k].name}}}, {"error", e.what()}};
                res.reports[k].all_held = false;
                failures[k] = e.what();
            }
        }
    };
    std::size_t jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(corpus.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::size_t pairs = 0, skipped = 0, nilpotent = 0, explicit_decided = 0, cross = 0;
    Json reports = Json::array();
    Json failed = Json::array();
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const AnalysisReport& r = res.reports[k];
        if (!failures[k].empty() || !r.all_held)
            failed.push_back(k);
        if (failures[k].empty() && !r.admissible) {
            ++skipped;
        } else if (r.admissible) {
            ++pairs;
            nilpotent += r.nilpotent;
            explicit_decided += r.explicit_verdict.has_value();
            cross += r.cross_engine_run;
        }
        res.all_held = res.all_held && failures[k].empty() && r.all_held;
        reports.push_back(r.body);
    }
    res.body["reports"] = std::move(reports);
    res.body["summary"] = Json{{"pairs", pairs},
                               {"not_admissible", skipped},
                               {"nilpotent", nilpotent},
                               {"explicit_decided", explicit_decided},
                               {"cross_engine_checked", cross},
                               {"failed", std::move(failed)},
                               {"all_theorems_held", res.all_held}};
    return res;
}

Json koszul_report(const KoszulInput& in, std::size_t max_q, std::size_t budget)
{
    Json out = {{"n", in.n}, {"kernel_dim", in.kernel.dim()}};
    Json dims = Json::array();
    for (std::size_t q = 0; q <= max_q; ++q) {
        try {
            dims.push_back(graded_dim(in, q, budget));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DimensionOverflow)
                throw;
            dims.push_back("overflow");
        }
    }
    out["dims"] = std::move(dims);
    try {
        out["nilpotent"] = is_nilpotent_explicit(in, budget);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DimensionOverflow)
            throw;
        out["nilpotent"] = "skipped";
    }
    return out;
}

}  // namespace kmk
