#ifndef DYNTOPO_CLI_HPP
#define DYNTOPO_CLI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo::cli {

enum class EngineKind { sparse, dense, automatic };

/// "sparse", "dense" or "auto"; anything else is a UsageError.
EngineKind parse_engine(std::string_view name);
/// Dense when m/n >= n^(1/3) * lg n, else sparse.
EngineKind choose_engine(std::size_t n, std::size_t m);
std::string_view engine_name(EngineKind kind);

struct RunReport {
    EngineKind engine = EngineKind::sparse;
    std::size_t n = 0;
    std::size_t m_processed = 0;
    std::optional<std::size_t> cycle_at;
    std::optional<WitnessCycle> witness;
    std::vector<VertexId> order;  // final topological order when acyclic
    TraversalCounters counters;
    double wall_ms = 0.0;
};

/// Replays the stream until the first cycle or the end. `automatic` is resolved first.
RunReport replay(const ArcStream& stream, EngineKind engine);

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCycle = 2;

/// JSON report; wall_ms is included only with `timing`.
CommandResult cmd_detect(const ArcStream& stream, EngineKind engine, bool timing = false);
/// One vertex id per line, or exit 2 with the cycle index on stderr.
CommandResult cmd_toposort(const ArcStream& stream, EngineKind engine);
/// One component per line, members ascending; merge count on stderr.
CommandResult cmd_scc(const ArcStream& stream, EngineKind engine);

struct BenchSpec {
    std::string suite;              // sparse-adv | dense-adv | random
    std::vector<std::size_t> sizes;  // n for sparse-adv and random, r for dense-adv
    EngineKind engine = EngineKind::automatic;
    std::size_t reps = 1;
    std::uint64_t seed = 1;
};

/// The stream a benchmark row runs on.
ArcStream bench_stream(const std::string& suite, std::size_t size, std::uint64_t seed);
/// CSV with header: suite,n,m,engine,arc_traversals,backward_aborts,level_increases,counter_resets,wall_ms
CommandResult cmd_bench(const BenchSpec& spec);

} // namespace dyntopo::cli

#endif // DYNTOPO_CLI_HPP
