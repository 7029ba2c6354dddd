#include "acyclic/cli.hpp"

#include "acyclic/coloring_json.hpp"
#include "acyclic/deg3_colorer.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/generator.hpp"
#include "acyclic/kdeg_colorer.hpp"
#include "acyclic/oracle.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace acyclic::cli {

namespace {

struct Colored {
    ColoringRun run;
    std::string algorithm;
    int k = 0;
    int degeneracy = 0;
};

Colored color_with(const RunConfig& config, const Graph& g)
{
    Colored out;
    out.degeneracy = degeneracy(g).degeneracy;
    Algorithm algo = config.algorithm;
    if (algo == Algorithm::Auto) {
        algo = !config.k && out.degeneracy <= 3 ? Algorithm::Deg3 : Algorithm::Kdeg;
        if (config.k && *config.k <= 3) {
            algo = Algorithm::Deg3;
        }
    }
    if (algo == Algorithm::Deg3) {
        out.algorithm = "deg3";
        out.k = 3;
        if (config.k && *config.k < out.degeneracy) {
            throw Error(ErrorCode::NotKDegenerate, "--k is below the degeneracy of the input");
        }
        out.run = color_graph_3deg(g);
        return out;
    }
    out.algorithm = "kdeg";
    out.k = config.k.value_or(std::max(out.degeneracy, 4));
    out.run = color_graph_kdeg(g, out.k);
    return out;
}

int exit_code_for(const Error& err)
{
    switch (err.code()) {
    case ErrorCode::NotKDegenerate: return kExitNotDegenerate;
    case ErrorCode::ExtensionFailed:
    case ErrorCode::ClaimViolated: return kExitVerification;
    case ErrorCode::Exceeded: return kExitExceeded;
    default: return kExitParse;
    }
}

// Writes to the output path when one is given, else to `fallback`.
void emit(const RunConfig& config, std::ostream& fallback, const std::string& text)
{
    if (config.output.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::ParseError, "cannot write " + config.output);
    }
    file << text;
}

std::string witness_line(const ColoringReport& report)
{
    std::ostringstream os;
    if (report.witness) {
        os << "witness cycle (colors " << report.witness->alpha << "," << report.witness->beta
           << "):";
        for (Vertex v : report.witness->vertices) {
            os << ' ' << v;
        }
        os << '\n';
    }
    if (report.conflict) {
        os << "conflict: vertex " << report.conflict->first << " has two edges colored "
           << report.conflict->second << '\n';
    }
    return os.str();
}

int run_color(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Graph g = read_edge_list_file(config.input);
    const Colored colored = color_with(config, g);
    const auto& run = colored.run;

    std::string verified = "skipped";
    ColoringReport report;
    if (config.verify) {
        report = verify_coloring(g, run.coloring, run.palette);
        verified = report.ok() ? "yes" : "no";
    }
    auto doc = coloring_to_json(g, run.coloring);
    doc["algorithm"] = colored.algorithm;
    doc["k"] = colored.k;
    const std::string text = doc.dump() + "\n";
    const bool json_to_stdout = config.output.empty() && config.json;
    if (!config.output.empty() || config.json) {
        emit(config, out, text);
    }
    std::ostream& summary = json_to_stdout ? err : out;
    summary << "n=" << g.num_vertices() << " m=" << g.num_edges() << " delta=" << g.max_degree()
            << " degeneracy=" << colored.degeneracy << " algorithm=" << colored.algorithm
            << " palette=" << run.palette << " used=" << run.coloring.colors_used()
            << " verified=" << verified << '\n';
    if (config.verify && !report.ok()) {
        err << witness_line(report);
        return kExitVerification;
    }
    return kExitOk;
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto doc = read_json_file(config.input);
    ColoringReport report;
    if (config.graph.empty()) {
        const LoadedColoring loaded = coloring_from_json(doc);
        report = verify_coloring(loaded.graph, loaded.coloring, config.bound);
    } else {
        const Graph g = read_edge_list_file(config.graph);
        report = verify_coloring(g, coloring_from_json(doc, g), config.bound);
    }
    if (config.json) {
        emit(config, out, report_to_json(report).dump() + "\n");
    }
    std::ostream& summary = config.json && config.output.empty() ? err : out;
    summary << "total=" << (report.total ? "yes" : "no")
            << " proper=" << (report.proper ? "yes" : "no")
            << " acyclic=" << (report.acyclic ? "yes" : "no") << " used=" << report.colors_used
            << " within_bound=" << (report.within_bound ? "yes" : "no")
            << " verified=" << (report.ok() ? "yes" : "no") << '\n';
    if (!report.ok()) {
        err << witness_line(report);
        return kExitVerification;
    }
    return kExitOk;
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Graph g = read_edge_list_file(config.input);
    const int max_colors = config.max_colors.value_or(g.max_degree() + 5);
    const OracleResult result = exact_acyclic_chromatic_index(g, max_colors);
    nlohmann::json doc{
        {"schema", kSchemaVersion},
        {"exact", result.exact_index},
        {"delta", g.max_degree()},
        {"nodes_explored", result.nodes_explored},
        {"coloring", coloring_to_json(g, result.witness)},
    };
    emit(config, out, doc.dump() + "\n");
    if (!config.output.empty()) {
        out << "exact=" << result.exact_index << " nodes=" << result.nodes_explored << '\n';
    }
    (void)err;
    return kExitOk;
}

int run_generate(const RunConfig& config, std::ostream& out, std::ostream& /*err*/)
{
    GenSpec spec;
    spec.family = parse_family(config.family);
    spec.n = config.n;
    spec.k = config.k.value_or(3);
    spec.seed = config.seed;
    spec.attachment = config.saturated ? Attachment::Saturated : Attachment::Uniform;
    const Graph g = make_family(spec);
    std::ostringstream os;
    write_edge_list(os, g);
    emit(config, out, os.str());
    return kExitOk;
}

struct BenchItem {
    GenSpec spec;
};

struct BenchRow {
    std::string line;
    bool failed = false;
};

BenchRow bench_one(const RunConfig& config, const BenchItem& item)
{
    const Graph g = make_family(item.spec);
    RunConfig local = config;
    local.algorithm = Algorithm::Auto;
    local.k.reset();
    const auto start = std::chrono::steady_clock::now();
    BenchRow row;
    std::ostringstream os;
    os << to_string(item.spec.family) << ',' << g.num_vertices() << ',' << g.num_edges() << ','
       << item.spec.k << ',' << item.spec.seed << ',';
    try {
        const Colored colored = color_with(local, g);
        const auto stop = std::chrono::steady_clock::now();
        const ColoringReport report
            = verify_coloring(g, colored.run.coloring, colored.run.palette);
        std::string exact;
        if (g.num_vertices() <= config.oracle_max_n) {
            const int oracle_exact
                = exact_acyclic_chromatic_index(g, std::max(colored.run.palette, 1)).exact_index;
            exact = std::to_string(oracle_exact);
            row.failed |= oracle_exact > colored.run.coloring.colors_used();
        }
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        os << colored.degeneracy << ',' << g.max_degree() << ',' << colored.algorithm << ','
           << colored.run.palette << ',' << colored.run.coloring.colors_used() << ',' << exact
           << ',' << (report.ok() ? "yes" : "no") << ',' << ms;
        row.failed |= !report.ok();
    } catch (const Error& e) {
        os << ",,,,,," << "error:" << to_string(e.code()) << ',';
        row.failed = true;
    }
    row.line = os.str();
    return row;
}

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (config.min_n < 1 || config.max_n < config.min_n || config.count < 0) {
        throw Error(ErrorCode::BadSpec, "bench needs 1 <= min-n <= max-n and count >= 0");
    }
    Rng rng(config.seed);
    std::vector<BenchItem> items;
    const auto span = static_cast<std::uint64_t>(config.max_n - config.min_n + 1);
    for (int rep = 0; rep < config.count; ++rep) {
        const int n = config.min_n + static_cast<int>(rng.below(span));
        const std::uint64_t seed = rng.next();
        for (int k : {1, 2, 3, 4, 5, 6, 8}) {
            items.push_back({{Family::RandomKdeg, n, k, seed, Attachment::Uniform}});
        }
        items.push_back({{Family::RandomKdeg, n, 3, seed, Attachment::Saturated}});
        items.push_back({{Family::SubcubicRandom, n, 3, seed, Attachment::Uniform}});
        if (n >= 4) {
            items.push_back({{Family::Wheel, n, 3, seed, Attachment::Uniform}});
        }
        if (n >= 3) {
            items.push_back({{Family::Cycle, n, 2, seed, Attachment::Uniform}});
        }
        items.push_back({{Family::Star, n, 1, seed, Attachment::Uniform}});
    }

    std::vector<BenchRow> rows(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            rows[i] = bench_one(config, items[i]);
        }
    };
    const int jobs = std::max(1, config.jobs);
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    std::ostringstream csv;
    csv << "family,n,m,k,seed,degeneracy,delta,algorithm,palette,used,oracle_exact,verified,wall_ms\n";
    int failures = 0;
    for (const auto& row : rows) {
        csv << row.line << '\n';
        failures += row.failed ? 1 : 0;
    }
    emit(config, out, csv.str());
    if (failures > 0) {
        err << failures << " bench rows failed verification\n";
        return kExitVerification;
    }
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::Color: return run_color(config, out, err);
        case Command::Verify: return run_verify(config, out, err);
        case Command::Oracle: return run_oracle(config, out, err);
        case Command::Generate: return run_generate(config, out, err);
        case Command::Bench: return run_bench(config, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitParse;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Acyclic edge coloring of degenerate graphs", "acyclic-color"};
    app.require_subcommand(1);
    RunConfig config;

    std::string algorithm = "auto";
    int k = 0;
    int max_colors = 0;
    int bound = 0;
    bool no_verify = false;

    auto* color = app.add_subcommand("color", "Color an edge-list graph");
    color->add_option("--input", config.input, "Edge-list file")->required();
    color->add_option("--output", config.output, "Write the coloring JSON here");
    color->add_option("--algorithm", algorithm, "auto, kdeg or deg3")
        ->check(CLI::IsMember({"auto", "kdeg", "deg3"}));
    color->add_option("--k", k, "Degeneracy budget");
    color->add_flag("--no-verify", no_verify, "Skip verification of the result");
    color->add_flag("--json", config.json, "Print the coloring JSON to stdout");

    auto* verify = app.add_subcommand("verify", "Verify a coloring JSON file");
    verify->add_option("--input", config.input, "Coloring JSON")->required();
    verify->add_option("--graph", config.graph, "Edge list the coloring must cover");
    verify->add_option("--bound", bound, "Maximum number of colors allowed");
    verify->add_option("--output", config.output, "Write the report JSON here");
    verify->add_flag("--json", config.json, "Emit the report as JSON");

    auto* oracle = app.add_subcommand("oracle", "Exact acyclic chromatic index (small graphs)");
    oracle->add_option("--input", config.input, "Edge-list file")->required();
    oracle->add_option("--max-colors", max_colors, "Largest palette to try (default Δ+5)");
    oracle->add_option("--output", config.output, "Write the result JSON here");
    oracle->add_flag("--json", config.json, "Accepted for symmetry; output is always JSON");

    auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
    generate->add_option("--family", config.family,
        "random-kdeg, path, cycle, star, complete, wheel, subcubic-random");
    generate->add_option("--n", config.n, "Vertex count");
    generate->add_option("--k", k, "Degeneracy budget for random-kdeg");
    generate->add_option("--seed", config.seed, "Random seed");
    generate->add_flag("--saturated", config.saturated, "Attach every vertex to min(k, i) earlier ones");
    generate->add_option("--output", config.output, "Output path");

    auto* bench = app.add_subcommand("bench", "Color a generated corpus and emit CSV");
    bench->add_option("--seed", config.seed, "Corpus seed");
    bench->add_option("--count", config.count, "Repetitions per family");
    bench->add_option("--min-n", config.min_n, "Smallest vertex count");
    bench->add_option("--max-n", config.max_n, "Largest vertex count");
    bench->add_option("--oracle-max-n", config.oracle_max_n, "Run the exact oracle up to this n");
    bench->add_option("--jobs", config.jobs, "Worker threads");
    bench->add_option("--output", config.output, "CSV output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    if (color->parsed()) {
        config.command = Command::Color;
    } else if (verify->parsed()) {
        config.command = Command::Verify;
    } else if (oracle->parsed()) {
        config.command = Command::Oracle;
    } else if (generate->parsed()) {
        config.command = Command::Generate;
    } else {
        config.command = Command::Bench;
    }
    config.algorithm = algorithm == "kdeg" ? Algorithm::Kdeg
        : algorithm == "deg3"              ? Algorithm::Deg3
                                           : Algorithm::Auto;
    if (color->count("--k") > 0 || generate->count("--k") > 0) {
        config.k = k;
    }
    if (oracle->count("--max-colors") > 0) {
        config.max_colors = max_colors;
    }
    if (verify->count("--bound") > 0) {
        config.bound = bound;
    }
    config.verify = !no_verify;
    return run(config, out, err);
}

} // namespace acyclic::cli
