#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dyntopo/oracle.hpp"
#include "dyntopo/sparse_engine.hpp"
#include "dyntopo/workloads.hpp"

using namespace dyntopo;

namespace {

bool keys_forward(const SparseEngine& e, const std::vector<Arc>& arcs) {
    return std::all_of(arcs.begin(), arcs.end(),
                       [&](Arc a) { return e.order_key(a.tail) < e.order_key(a.head); });
}

// In-lists hold exactly the stored arcs whose endpoints share a level.
bool in_lists_consistent(const SparseEngine& e, const std::vector<Arc>& arcs) {
    std::vector<std::vector<VertexId>> expected(e.vertex_count());
    for (Arc a : arcs) {
        if (e.level(a.tail) == e.level(a.head)) {
            expected[a.head].push_back(a.tail);
        }
    }
    for (VertexId v = 0; v < e.vertex_count(); ++v) {
        auto got = std::vector<VertexId>(e.same_level_in_arcs(v).begin(), e.same_level_in_arcs(v).end());
        std::sort(got.begin(), got.end());
        std::sort(expected[v].begin(), expected[v].end());
        if (got != expected[v]) {
            return false;
        }
    }
    return true;
}

std::vector<VertexId> sorted_by_key(const SparseEngine& e) {
    std::vector<VertexId> order(e.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return e.order_key(a) < e.order_key(b); });
    return order;
}

} // namespace

TEST_SUITE("sparse_engine") {

TEST_CASE("construction with a known arc count") {
    SparseEngine e(3, 9);
    CHECK(e.delta() == 3);
    for (VertexId v = 0; v < 3; ++v) {
        CHECK(e.level(v) == 1);
        CHECK(e.index(v) == static_cast<Index>(v) - 3);
    }
    CHECK(e.index_floor() == -3);
}

TEST_CASE("delta is the smaller of the two ceilings") {
    // Independent evaluation in floating point.
    for (std::size_t n = 1; n < 60; n += 7) {
        for (std::size_t m = 0; m < 400; m += 13) {
            const double a = std::ceil(std::sqrt(static_cast<double>(m)) - 1e-12);
            const double b = std::ceil(std::cbrt(static_cast<double>(n) * n) - 1e-9);
            CHECK(sparse_delta(n, m) == std::max<std::size_t>(1, static_cast<std::size_t>(std::min(a, b))));
        }
    }
}

TEST_CASE("empty and identity states") {
    SparseEngine empty(0);
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.topological_list().empty());
    SparseEngine two(2);
    CHECK(two.topological_list() == std::vector<VertexId>{0, 1});
    CHECK(two.order_key(0) == std::pair<Level, Index>{1, -2});
    CHECK(two.delta() == 1);
}

TEST_CASE("arc consistent with the order takes the fast path") {
    SparseEngine e(2);
    CHECK(e.insert_arc(0, 1).kind == OutcomeKind::accepted);
    CHECK(e.counters().arc_traversals == 0);
    CHECK(e.counters().reindex_moves == 0);
    CHECK(std::vector<VertexId>(e.out_arcs(0).begin(), e.out_arcs(0).end()) == std::vector<VertexId>{1});
    CHECK(std::vector<VertexId>(e.same_level_in_arcs(1).begin(), e.same_level_in_arcs(1).end()) ==
          std::vector<VertexId>{0});
}

TEST_CASE("two-arc cycle found by the backward search") {
    SparseEngine e(2);
    e.insert_arc(0, 1);
    const InsertionOutcome o = e.insert_arc(1, 0);
    REQUIRE(o.kind == OutcomeKind::cycle_detected);
    CHECK(o.witness.vertices == std::vector<VertexId>{0, 1});
    CHECK(e.poisoned());
    CHECK_THROWS_AS(e.insert_arc(0, 1), UsageError);
    CHECK_THROWS_AS(e.topological_list(), UsageError);
    CHECK_THROWS_AS(e.add_vertex(), UsageError);
}

TEST_CASE("reversing arc re-indexes the tail") {
    SparseEngine e(2, 4);
    REQUIRE(e.delta() == 2);
    CHECK(e.insert_arc(1, 0).kind == OutcomeKind::accepted);
    CHECK(e.order_key(1) == std::pair<Level, Index>{1, -3});
    CHECK(e.order_key(0) == std::pair<Level, Index>{1, -2});
    CHECK(e.topological_list() == std::vector<VertexId>{1, 0});
    CHECK(e.index_floor() == -3);
}

TEST_CASE("backward search with nothing to traverse") {
    SparseEngine e(4, 1);
    REQUIRE(e.delta() == 1);
    e.insert_arc(0, 1);
    e.insert_arc(1, 2);
    CHECK(e.order_key(3) > e.order_key(1));
    CHECK(e.insert_arc(3, 1).kind == OutcomeKind::accepted);
    CHECK(e.last_backward_arcs() == 0);
    const std::vector<Arc> arcs{{0, 1}, {1, 2}, {3, 1}};
    CHECK(keys_forward(e, arcs));
    CHECK(static_toposort(StaticGraph(4, arcs)).acyclic());
}

TEST_CASE("order list follows an inserted reversal") {
    SparseEngine e(3);
    e.insert_arc(2, 0);
    const auto list = e.topological_list();
    CHECK(std::find(list.begin(), list.end(), 2) < std::find(list.begin(), list.end(), 0));
    CHECK(list.size() == 3);
    CHECK(e.order_key(0) != e.order_key(2));
}

TEST_CASE("vertices added on line take fresh indices") {
    SparseEngine e(0);
    CHECK(e.add_vertex() == 0);
    CHECK(e.order_key(0) == std::pair<Level, Index>{1, -1});
    e.add_vertex();
    e.add_vertex();
    CHECK(e.order_key(1) == std::pair<Level, Index>{1, -2});
    CHECK(e.order_key(2) == std::pair<Level, Index>{1, -3});
    CHECK(e.topological_list() == std::vector<VertexId>{2, 1, 0});
}

TEST_CASE("adaptive delta only grows and tracks doubling") {
    SparseEngine e(0);
    CHECK(e.delta() == 1);
    std::size_t last = e.delta();
    SplitMix64 rng(3);
    std::vector<Arc> arcs;
    for (int step = 0; step < 3000; ++step) {
        if (e.vertex_count() < 2 || rng.below(4) == 0) {
            e.add_vertex();
        } else {
            // Arcs from lower to higher id stay acyclic.
            auto a = static_cast<VertexId>(rng.below(e.vertex_count()));
            auto b = static_cast<VertexId>(rng.below(e.vertex_count()));
            if (a == b) {
                continue;
            }
            e.insert_arc(std::min(a, b), std::max(a, b));
            arcs.push_back({std::min(a, b), std::max(a, b)});
        }
        REQUIRE(e.delta() >= last);
        last = e.delta();
    }
    CHECK(last > 1);
    CHECK(keys_forward(e, arcs));
    CHECK(e.topological_list() == sorted_by_key(e));
}

TEST_CASE("self loop and duplicate arcs") {
    SparseEngine e(3);
    CHECK(e.insert_arc(0, 1).kind == OutcomeKind::accepted);
    CHECK(e.insert_arc(0, 1).kind == OutcomeKind::no_op);
    CHECK(e.arc_count() == 1);
    const InsertionOutcome loop = e.insert_arc(2, 2);
    CHECK(loop.kind == OutcomeKind::cycle_detected);
    CHECK(loop.witness.vertices == std::vector<VertexId>{2});
}

TEST_CASE("unknown vertices are rejected") {
    SparseEngine e(2);
    CHECK_THROWS_AS(e.insert_arc(0, 2), UsageError);
    CHECK_THROWS_AS(e.order_key(5), UsageError);
}

TEST_CASE("random streams agree with the static oracle") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        SplitMix64 rng(seed);
        const std::size_t n = 2 + rng.below(40);
        const std::size_t m = 1 + rng.below(std::min<std::size_t>(n * (n - 1), 300));
        const ArcStream s = gen_random_stream(n, m, seed);
        const auto expected = first_cycle_index(s);
        SparseEngine e(n, m);
        std::vector<Arc> stored;
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < s.events.size(); ++i) {
            const InsertionOutcome o = e.insert_arc(s.events[i].tail, s.events[i].head);
            REQUIRE(e.last_backward_arcs() <= e.delta());
            if (o.kind == OutcomeKind::cycle_detected) {
                CHECK(witness_is_valid(o.witness, stored, s.events[i]));
                found = i;
                break;
            }
            stored.push_back(s.events[i]);
            REQUIRE(keys_forward(e, stored));
            REQUIRE(in_lists_consistent(e, stored));
            REQUIRE(e.topological_list() == sorted_by_key(e));
        }
        CHECK(found == expected);
    }
}

TEST_CASE("level and index bounds on random DAG streams") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        SplitMix64 rng(seed);
        const std::size_t n = 2 + rng.below(60);
        const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
        const ArcStream s = gen_random_dag_stream(n, m, seed);
        SparseEngine e(n, m);
        const Level cap = static_cast<Level>(std::min(ceil_sqrt(m), ceil_two_thirds_power(n))) + 2;
        for (Arc a : s.events) {
            REQUIRE(e.insert_arc(a.tail, a.head).kind == OutcomeKind::accepted);
            REQUIRE(e.max_level() <= cap);
            REQUIRE(e.index_floor() >= -static_cast<Index>(n * m + n));
        }
        CHECK(keys_forward(e, s.events));
    }
}

}
