#ifndef DYNTOPO_ORACLE_HPP
#define DYNTOPO_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo {

/// Plain adjacency lists, used only by the reference algorithms below.
struct StaticGraph {
    std::size_t n = 0;
    std::vector<std::vector<VertexId>> adjacency;

    explicit StaticGraph(std::size_t vertices = 0) : n(vertices), adjacency(vertices) {}
    StaticGraph(std::size_t vertices, std::span<const Arc> arcs);

    void add_arc(VertexId tail, VertexId head);
};

/// Either a topological order or a cycle, never both.
struct ToposortResult {
    std::optional<std::vector<VertexId>> order;
    std::optional<WitnessCycle> cycle;

    bool acyclic() const { return order.has_value(); }
};

/// Reverse DFS postorder, with roots taken in decreasing id so that an
/// arc-free graph yields id order. On a back arc, returns that cycle.
ToposortResult static_toposort(const StaticGraph& g);

/// Strong components in topological order of the condensation, each sorted.
std::vector<std::vector<VertexId>> tarjan_scc(const StaticGraph& g);

/// Sorts each group and orders groups by smallest member.
std::vector<std::vector<VertexId>> normalize_partition(std::vector<std::vector<VertexId>> parts);

/// Number of vertices with a path to v, v included.
std::size_t size_of(const StaticGraph& g, VertexId v);

/// Index of the first event whose insertion makes the graph cyclic.
std::optional<std::size_t> first_cycle_index(const ArcStream& stream);

} // namespace dyntopo

#endif // DYNTOPO_ORACLE_HPP
