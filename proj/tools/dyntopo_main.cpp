#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dyntopo/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw dyntopo::UsageError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    using namespace dyntopo;
    CLI::App app{"Incremental cycle detection, topological order and strong components"};
    app.require_subcommand(1);

    std::string input;
    std::string engine = "auto";
    bool timing = false;

    auto* detect = app.add_subcommand("detect", "report the first cycle as JSON");
    auto* topo = app.add_subcommand("toposort", "print a topological order");
    auto* scc = app.add_subcommand("scc", "print strong components");
    for (auto* sub : {detect, topo, scc}) {
        sub->add_option("--input", input, "arc-stream file (stdin if absent)");
        sub->add_option("--engine", engine, "sparse, dense or auto");
    }
    detect->add_flag("--timing", timing, "include wall_ms");

    cli::BenchSpec bench_spec;
    std::string bench_engine = "auto";
    auto* bench = app.add_subcommand("bench", "run a benchmark suite and print CSV");
    bench->add_option("--suite", bench_spec.suite, "sparse-adv, dense-adv or random")->required();
    bench->add_option("--size", bench_spec.sizes, "n (r for dense-adv); repeatable")->required();
    bench->add_option("--engine", bench_engine, "sparse, dense or auto");
    bench->add_option("--reps", bench_spec.reps, "repetitions per size");
    bench->add_option("--seed", bench_spec.seed, "seed for the random suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        cli::CommandResult result;
        if (bench->parsed()) {
            bench_spec.engine = cli::parse_engine(bench_engine);
            result = cli::cmd_bench(bench_spec);
        } else {
            const ArcStream stream = parse_arc_stream(read_input(input));
            const cli::EngineKind kind = cli::parse_engine(engine);
            if (detect->parsed()) {
                result = cli::cmd_detect(stream, kind, timing);
            } else if (topo->parsed()) {
                result = cli::cmd_toposort(stream, kind);
            } else {
                result = cli::cmd_scc(stream, kind);
            }
        }
        std::cout << result.out;
        std::cerr << result.err;
        return result.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return cli::kExitUsage;
}
