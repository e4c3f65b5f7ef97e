#include "apsp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "apsp/apsp_approx.hpp"
#include "apsp/apsp_exact.hpp"
#include "apsp/bridging.hpp"
#include "apsp/core.hpp"
#include "apsp/dist_prod.hpp"
#include "apsp/io.hpp"
#include "apsp/oracle.hpp"
#include "apsp/paths.hpp"

namespace apsp {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed'0000'0000'0001ULL;

Graph load_graph(const std::string& path, std::istream* fallback = nullptr) {
    if (path == "-") {
        if (fallback) return load_dimacs(*fallback);
        return load_dimacs(std::cin);
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return load_dimacs(in);
}

Kernel parse_kernel(const std::string& name) {
    if (name == "auto") return Kernel::Auto;
    if (name == "naive") return Kernel::Naive;
    if (name == "encoded") return Kernel::Encoded;
    throw ConfigError("unknown kernel: " + name);
}

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Naive: return "naive";
        case Kernel::Encoded: return "encoded";
        default: return "auto";
    }
}

void emit_matrix(const WeightMatrix& m, const std::string& path, const std::string& format,
                 std::ostream& out) {
    auto write = [&](std::ostream& os) {
        if (format == "binary")
            write_dump(os, m);
        else
            write_tsv(os, m);
    };
    if (path == "-") {
        write(out);
    } else {
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + path);
        write(file);
    }
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path == "-") {
        out << text;
    } else {
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + path);
        file << text;
    }
}

nlohmann::json summarize(const ApspResult& r, const WeightMatrix& d, double seconds) {
    nlohmann::json iterations = nlohmann::json::array();
    for (const IterationStats& it : r.iterations)
        iterations.push_back({{"iteration", it.iteration},
                              {"s", it.s},
                              {"bridge_size", it.bridge_size},
                              {"kernel", kernel_name(it.kernel)},
                              {"seconds", it.seconds}});
    nlohmann::json j{{"n", d.rows()},
                     {"max_abs_weight", max_abs_weight(d)},
                     {"iteration_count", r.iterations.size()},
                     {"iterations", iterations},
                     {"wall_seconds", seconds},
                     {"negative_cycle", r.negative_cycle.has_value()}};
    return j;
}

ApspResult solve(const std::string& algorithm, const WeightMatrix& d,
                 const SolverConfig& cfg) {
    if (algorithm == "det") return short_path(d, cfg);
    if (algorithm == "rand") return rand_short_path(d, cfg);
    if (algorithm == "unweighted") return unwght_short_path(d, cfg);
    if (algorithm == "naive") {
        OracleResult o = floyd_warshall(d);
        ApspResult r{std::move(o.distances), WitnessMatrix(d.rows(), d.rows(), 0),
                     StampMatrix(d.rows(), d.rows(), 0), std::nullopt, {}};
        r.negative_cycle = detect_negative_cycle(r);
        return r;
    }
    throw ConfigError("unknown algorithm: " + algorithm);
}

WeightMatrix load_estimate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dump file: " + path);
    char magic[4] = {};
    in.read(magic, 4);
    in.clear();
    in.seekg(0);
    if (magic[0] == 'A' && magic[1] == 'P' && magic[2] == 'S' && magic[3] == 'P')
        return read_dump(in);
    return read_tsv(in);
}

Graph random_bench_graph(int n, Weight max_weight, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<Weight> weight(1, max_weight);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng) < density) edges.push_back({i, j, weight(rng)});
    return make_graph(n, std::move(edges));
}

struct CommonFlags {
    std::string input = "-";
    std::string output = "-";
    std::string format = "tsv";
    std::string algorithm = "det";
    std::string kernel = "auto";
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_algorithm = true) {
    cmd->add_option("-i,--input", flags.input, "DIMACS graph file, or - for stdin");
    cmd->add_option("-o,--output", flags.output, "output file, or - for stdout");
    cmd->add_option("--format", flags.format, "tsv, binary, or json-summary")
        ->check(CLI::IsMember({"tsv", "binary", "json-summary"}));
    if (with_algorithm)
        cmd->add_option("--algorithm", flags.algorithm, "rand, det, unweighted, or naive")
            ->check(CLI::IsMember({"rand", "det", "unweighted", "naive"}));
    cmd->add_option("--seed", flags.seed, "randomness seed");
    cmd->add_option("--force-kernel", flags.kernel, "auto, naive, or encoded")
        ->check(CLI::IsMember({"auto", "naive", "encoded"}));
    cmd->add_option("--threads", flags.threads, "worker threads (results are invariant)");
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and approximate all-pairs shortest paths"};
    app.require_subcommand(1);

    CommonFlags exact_flags;
    auto* exact = app.add_subcommand("exact", "solve APSP exactly");
    add_common(exact, exact_flags);

    CommonFlags approx_flags;
    double epsilon = 0.0;
    bool scale_reals = false;
    auto* approx = app.add_subcommand("approx", "solve APSP with (1+eps) stretch");
    add_common(approx, approx_flags, false);
    approx->add_option("--epsilon", epsilon, "relative error bound")->required();
    approx->add_flag("--scale-reals", scale_reals,
                     "pre-scale weights by 1/epsilon (rounded up)");

    CommonFlags prod_flags;
    Weight cap = kMaxFinite;
    auto* prod = app.add_subcommand("prod", "capped distance product of D with itself");
    add_common(prod, prod_flags, false);
    prod->add_option("--cap", cap, "participation cap on |entry|");

    CommonFlags path_flags;
    int from = 0, to = 0;
    auto* path = app.add_subcommand("path", "print one shortest path");
    add_common(path, path_flags);
    path->add_option("--from", from, "source vertex (1-based)")->required();
    path->add_option("--to", to, "target vertex (1-based)")->required();

    CommonFlags bridge_flags;
    int bridge_s = 2;
    auto* bridge = app.add_subcommand("bridge", "compute an s-bridging set");
    add_common(bridge, bridge_flags);
    bridge->add_option("--s", bridge_s, "bridging parameter")->required();

    CommonFlags verify_flags;
    std::string against;
    double verify_epsilon = 0.0;
    auto* verify = app.add_subcommand("verify", "check a dump against the oracle");
    add_common(verify, verify_flags, false);
    verify->add_option("--against", against, "distance dump (tsv or binary)")->required();
    verify->add_option("--epsilon", verify_epsilon,
                       "allow (1+eps) stretch instead of exact equality");

    CommonFlags bench_flags;
    std::vector<int> sizes{64, 128, 256, 512};
    Weight bench_m = 2;
    double density = 0.08;
    auto* bench = app.add_subcommand("bench", "time the deterministic solver");
    bench->add_option("--sizes", sizes, "graph sizes to run");
    bench->add_option("--max-weight", bench_m, "maximum edge weight");
    bench->add_option("--density", density, "edge probability");
    bench->add_option("--seed", bench_flags.seed, "randomness seed");
    bench->add_option("-o,--output", bench_flags.output, "output file, or - for stdout");

    std::vector<const char*> argv;
    argv.push_back("apsp");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (exact->parsed()) {
        Graph g = load_graph(exact_flags.input);
        WeightMatrix d = to_weight_matrix(g);
        SolverConfig cfg;
        cfg.seed = exact_flags.seed;
        cfg.force_kernel = parse_kernel(exact_flags.kernel);
        const auto t0 = std::chrono::steady_clock::now();
        ApspResult r = solve(exact_flags.algorithm, d, cfg);
        const bool negative = r.negative_cycle.has_value();
        if (negative) r = propagate_neg_infinity(std::move(r), g);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (exact_flags.format == "json-summary")
            emit_text(summarize(r, d, seconds).dump() + "\n", exact_flags.output, out);
        else
            emit_matrix(r.distances, exact_flags.output, exact_flags.format, out);
        return negative ? 2 : 0;
    }

    if (approx->parsed()) {
        Graph g = load_graph(approx_flags.input);
        WeightMatrix d = to_weight_matrix(g);
        if (scale_reals)
            for (Weight& v : d.data())
                if (is_finite(v) && v > 0) v = (Weight)std::ceil((double)v / epsilon);
        SolverConfig cfg;
        cfg.seed = approx_flags.seed;
        cfg.force_kernel = parse_kernel(approx_flags.kernel);
        const auto t0 = std::chrono::steady_clock::now();
        ApspResult r = approx_short_path(d, epsilon, cfg);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (approx_flags.format == "json-summary")
            emit_text(summarize(r, d, seconds).dump() + "\n", approx_flags.output, out);
        else
            emit_matrix(r.distances, approx_flags.output, approx_flags.format, out);
        return 0;
    }

    if (prod->parsed()) {
        Graph g = load_graph(prod_flags.input);
        WeightMatrix d = to_weight_matrix(g);
        DistProdOutput p = dist_prod(d, d, cap, WitnessMode::Auto, prod_flags.seed,
                                     parse_kernel(prod_flags.kernel));
        emit_matrix(p.product, prod_flags.output, prod_flags.format, out);
        return 0;
    }

    if (path->parsed()) {
        Graph g = load_graph(path_flags.input);
        WeightMatrix d = to_weight_matrix(g);
        if (from < 1 || from > g.n || to < 1 || to > g.n)
            throw ConfigError("path endpoints out of range");
        SolverConfig cfg;
        cfg.seed = path_flags.seed;
        cfg.force_kernel = parse_kernel(path_flags.kernel);
        ApspResult r = solve(path_flags.algorithm, d, cfg);
        if (r.negative_cycle) throw Error("graph has a negative cycle; paths undefined");
        SuccessorMatrix s = wit_to_suc(r.witnesses, r.stamps, d, /*strict=*/false);
        if (from != to && s(from - 1, to - 1) == 0) throw Error("no path");
        PathTrace trace = trace_simple_path(s, d, from - 1, to - 1);
        std::ostringstream line;
        for (std::size_t i = 0; i < trace.vertices.size(); ++i)
            line << (i ? " " : "") << trace.vertices[i] + 1;
        line << "\n" << trace.total_weight << "\n";
        emit_text(line.str(), path_flags.output, out);
        return 0;
    }

    if (bridge->parsed()) {
        Graph g = load_graph(bridge_flags.input);
        WeightMatrix d = to_weight_matrix(g);
        SolverConfig cfg;
        cfg.seed = bridge_flags.seed;
        ApspResult r = solve(bridge_flags.algorithm, d, cfg);
        BridgingSet b = find_bridge(r.witnesses, bridge_s);
        std::ostringstream line;
        for (std::size_t i = 0; i < b.vertices.size(); ++i)
            line << (i ? " " : "") << b.vertices[i] + 1;
        line << "\n";
        emit_text(line.str(), bridge_flags.output, out);
        return 0;
    }

    if (verify->parsed()) {
        Graph g = load_graph(verify_flags.input);
        WeightMatrix d = to_weight_matrix(g);
        WeightMatrix got = load_estimate(against);
        if (got.rows() != g.n) throw Error("dump dimension does not match the graph");
        OracleResult o = floyd_warshall(d);
        ApspResult expected{std::move(o.distances), WitnessMatrix(g.n, g.n, 0),
                            StampMatrix(g.n, g.n, 0), std::nullopt, {}};
        expected.negative_cycle = detect_negative_cycle(expected);
        if (expected.negative_cycle)
            expected = propagate_neg_infinity(std::move(expected), g);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                const Weight want = expected.distances(i, j);
                const Weight have = got(i, j);
                bool ok;
                if (verify_epsilon > 0.0 && is_finite(want) && want >= 0)
                    ok = is_finite(have) && have >= want &&
                         (double)have <= (1.0 + verify_epsilon) * (double)want + 1e-9;
                else
                    ok = have == want;
                if (!ok) {
                    std::ostringstream msg;
                    msg << "FAIL at (" << i + 1 << "," << j + 1 << "): expected ";
                    if (want >= kPlusInf)
                        msg << "inf";
                    else if (want <= kMinusInf)
                        msg << "-inf";
                    else
                        msg << want;
                    msg << ", got ";
                    if (have >= kPlusInf)
                        msg << "inf";
                    else if (have <= kMinusInf)
                        msg << "-inf";
                    else
                        msg << have;
                    msg << "\n";
                    emit_text(msg.str(), verify_flags.output, out);
                    return 1;
                }
            }
        emit_text("PASS\n", verify_flags.output, out);
        return 0;
    }

    if (bench->parsed()) {
        std::ostringstream lines;
        for (int n : sizes) {
            Graph g = random_bench_graph(n, bench_m, density, bench_flags.seed ^ (unsigned)n);
            WeightMatrix d = to_weight_matrix(g);
            SolverConfig cfg;
            cfg.seed = bench_flags.seed;
            const auto t0 = std::chrono::steady_clock::now();
            ApspResult r = short_path(d, cfg);
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (const IterationStats& it : r.iterations)
                lines << nlohmann::json{{"n", n},
                                        {"iteration", it.iteration},
                                        {"s", it.s},
                                        {"bridge_size", it.bridge_size},
                                        {"kernel", kernel_name(it.kernel)},
                                        {"seconds", it.seconds}}
                             .dump()
                      << "\n";
            lines << nlohmann::json{{"n", n},
                                    {"summary", true},
                                    {"edges", g.edges.size()},
                                    {"total_seconds", seconds}}
                         .dump()
                  << "\n";
        }
        emit_text(lines.str(), bench_flags.output, out);
        return 0;
    }

    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace apsp
