#ifndef DYNTOPO_GRAPH_CORE_HPP
#define DYNTOPO_GRAPH_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyntopo {

/// Dense 0-based vertex identifier.
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using Level = std::int64_t;
using Index = std::int64_t;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Packs an arc into a single key, for hashing.
constexpr std::uint64_t arc_key(VertexId tail, VertexId head) {
    return (static_cast<std::uint64_t>(tail) << 32) | head;
}

/// An arc-insertion sequence in file order, with the optional "p n m" header.
struct ArcStream {
    std::optional<std::size_t> declared_n;
    std::optional<std::size_t> declared_m;
    std::vector<Arc> events;

    /// declared_n when present, otherwise one more than the largest endpoint.
    std::size_t vertex_count() const;

    friend bool operator==(const ArcStream&, const ArcStream&) = default;
};

/// Thrown for malformed arc-stream text. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An endpoint is not below the declared vertex count.
class BoundsError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Precondition violations: unknown vertex, poisoned engine, bad generator parameters.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

ArcStream parse_arc_stream(std::string_view text);
std::string serialize_arc_stream(const ArcStream& stream);

/// A closed walk v0 -> v1 -> ... -> v_last -> v0.
struct WitnessCycle {
    std::vector<VertexId> vertices;

    friend bool operator==(const WitnessCycle&, const WitnessCycle&) = default;
};

/// True when every consecutive arc of the walk (including the closing one) is
/// either in `stored` or equals `trigger`, and the walk uses `trigger`.
bool witness_is_valid(const WitnessCycle& cycle, std::span<const Arc> stored, Arc trigger);

enum class OutcomeKind { accepted, cycle_detected, components_merged, no_op };

struct InsertionOutcome {
    OutcomeKind kind = OutcomeKind::accepted;
    WitnessCycle witness;               // cycle_detected
    std::vector<VertexId> merged;       // components_merged: old canonical vertices
    VertexId canonical = kNoVertex;     // components_merged: the surviving canonical

    static InsertionOutcome accepted() { return {}; }
    static InsertionOutcome no_op() { return {OutcomeKind::no_op, {}, {}, kNoVertex}; }
    static InsertionOutcome cycle(WitnessCycle w) {
        return {OutcomeKind::cycle_detected, std::move(w), {}, kNoVertex};
    }
    static InsertionOutcome merge(std::vector<VertexId> old, VertexId canon) {
        return {OutcomeKind::components_merged, {}, std::move(old), canon};
    }
};

std::string_view to_string(OutcomeKind kind);

/// Instrumentation shared by all engines. Every field only grows.
struct TraversalCounters {
    std::uint64_t arc_traversals = 0;
    std::uint64_t backward_aborts = 0;
    std::uint64_t level_increases = 0;
    std::uint64_t counter_resets = 0;
    std::uint64_t reindex_moves = 0;

    friend bool operator==(const TraversalCounters&, const TraversalCounters&) = default;
};

// Integer helpers used by the Delta threshold and the scale arithmetic.

/// floor(log2(x)) for x >= 1.
int floor_log2(std::uint64_t x);
/// Smallest d with d*d >= x.
std::uint64_t ceil_sqrt(std::uint64_t x);
/// Smallest d with d*d*d >= x*x, i.e. ceil(x^(2/3)).
std::uint64_t ceil_two_thirds_power(std::uint64_t x);

} // namespace dyntopo

#endif // DYNTOPO_GRAPH_CORE_HPP
