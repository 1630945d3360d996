#include "dyntopo/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dyntopo/dense_engine.hpp"
#include "dyntopo/scc_dense.hpp"
#include "dyntopo/scc_sparse.hpp"
#include "dyntopo/sparse_engine.hpp"
#include "dyntopo/workloads.hpp"

namespace dyntopo::cli {

EngineKind parse_engine(std::string_view name) {
    if (name == "sparse") {
        return EngineKind::sparse;
    }
    if (name == "dense") {
        return EngineKind::dense;
    }
    if (name == "auto") {
        return EngineKind::automatic;
    }
    throw UsageError("unknown engine '" + std::string(name) + "'");
}

EngineKind choose_engine(std::size_t n, std::size_t m) {
    if (n < 2) {
        return EngineKind::sparse;
    }
    const double nd = static_cast<double>(n);
    const double density = static_cast<double>(m) / nd;
    return density >= std::cbrt(nd) * std::log2(nd) ? EngineKind::dense : EngineKind::sparse;
}

std::string_view engine_name(EngineKind kind) {
    switch (kind) {
    case EngineKind::sparse:
        return "sparse";
    case EngineKind::dense:
        return "dense";
    case EngineKind::automatic:
        return "auto";
    }
    return "?";
}

namespace {

EngineKind resolve(EngineKind kind, const ArcStream& stream) {
    if (kind == EngineKind::automatic) {
        return choose_engine(stream.vertex_count(), stream.events.size());
    }
    return kind;
}

template <class Engine>
void run(Engine& engine, const ArcStream& stream, RunReport& report) {
    for (std::size_t i = 0; i < stream.events.size(); ++i) {
        const InsertionOutcome o = engine.insert_arc(stream.events[i].tail, stream.events[i].head);
        report.m_processed = i + 1;
        if (o.kind == OutcomeKind::cycle_detected) {
            report.cycle_at = i;
            report.witness = o.witness;
            break;
        }
    }
    if (!report.cycle_at) {
        report.order = engine.topological_list();
    }
    report.counters = engine.counters();
}

} // namespace

RunReport replay(const ArcStream& stream, EngineKind engine) {
    RunReport report;
    report.engine = resolve(engine, stream);
    report.n = stream.vertex_count();
    const auto start = std::chrono::steady_clock::now();
    if (report.engine == EngineKind::sparse) {
        SparseEngine e(report.n, stream.events.size());
        run(e, stream, report);
    } else {
        DenseEngine e(report.n);
        run(e, stream, report);
    }
    const auto stop = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

CommandResult cmd_detect(const ArcStream& stream, EngineKind engine, bool timing) {
    const RunReport r = replay(stream, engine);
    nlohmann::ordered_json j;
    j["engine"] = engine_name(r.engine);
    j["n"] = r.n;
    j["m_processed"] = r.m_processed;
    j["cycle_at"] = r.cycle_at ? nlohmann::ordered_json(*r.cycle_at) : nullptr;
    j["witness"] = r.witness ? nlohmann::ordered_json(r.witness->vertices) : nullptr;
    j["arc_traversals"] = r.counters.arc_traversals;
    j["backward_aborts"] = r.counters.backward_aborts;
    j["level_increases"] = r.counters.level_increases;
    j["counter_resets"] = r.counters.counter_resets;
    j["reindex_moves"] = r.counters.reindex_moves;
    if (timing) {
        j["wall_ms"] = r.wall_ms;
    }
    return {kExitOk, j.dump() + "\n", ""};
}

CommandResult cmd_toposort(const ArcStream& stream, EngineKind engine) {
    const RunReport r = replay(stream, engine);
    if (r.cycle_at) {
        return {kExitCycle, "", "cycle at event " + std::to_string(*r.cycle_at) + "\n"};
    }
    std::string out;
    for (VertexId v : r.order) {
        out += std::to_string(v);
        out += '\n';
    }
    return {kExitOk, std::move(out), ""};
}

CommandResult cmd_scc(const ArcStream& stream, EngineKind engine) {
    const std::size_t n = stream.vertex_count();
    std::size_t merges = 0;
    std::vector<std::vector<VertexId>> parts;
    auto run_scc = [&](auto& e) {
        for (const Arc& a : stream.events) {
            if (e.insert_arc(a.tail, a.head).kind == OutcomeKind::components_merged) {
                ++merges;
            }
        }
        parts = e.components_snapshot();
    };
    if (resolve(engine, stream) == EngineKind::sparse) {
        SccSparseEngine e(n, stream.events.size());
        run_scc(e);
    } else {
        SccDenseEngine e(n);
        run_scc(e);
    }
    std::string out;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(p[i]);
        }
        out += '\n';
    }
    return {kExitOk, std::move(out), "merges " + std::to_string(merges) + "\n"};
}

ArcStream bench_stream(const std::string& suite, std::size_t size, std::uint64_t seed) {
    if (suite == "sparse-adv") {
        return gen_sparse_adversary(size, 8 * size);
    }
    if (suite == "dense-adv") {
        return gen_dense_adversary(size);
    }
    if (suite == "random") {
        const std::size_t cap = size * (size > 0 ? size - 1 : 0) / 2;
        return gen_random_dag_stream(size, std::min(8 * size, cap), seed);
    }
    throw UsageError("unknown suite '" + suite + "'");
}

CommandResult cmd_bench(const BenchSpec& spec) {
    if (spec.sizes.empty()) {
        throw UsageError("bench needs at least one size");
    }
    std::ostringstream out;
    out << "suite,n,m,engine,arc_traversals,backward_aborts,level_increases,counter_resets,wall_ms\n";
    for (std::size_t size : spec.sizes) {
        const ArcStream stream = bench_stream(spec.suite, size, spec.seed);
        for (std::size_t rep = 0; rep < spec.reps; ++rep) {
            const RunReport r = replay(stream, spec.engine);
            char wall[32];
            std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
            out << spec.suite << ',' << r.n << ',' << r.m_processed << ',' << engine_name(r.engine)
                << ',' << r.counters.arc_traversals << ',' << r.counters.backward_aborts << ','
                << r.counters.level_increases << ',' << r.counters.counter_resets << ',' << wall
                << '\n';
        }
    }
    return {kExitOk, out.str(), ""};
}

} // namespace dyntopo::cli
