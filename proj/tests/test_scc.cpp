#include <doctest.h>

#include <algorithm>

#include "dyntopo/disjoint_sets.hpp"
#include "dyntopo/oracle.hpp"
#include "dyntopo/pair_matrix.hpp"
#include "dyntopo/scc_dense.hpp"
#include "dyntopo/scc_sparse.hpp"
#include "dyntopo/workloads.hpp"

using namespace dyntopo;

using Partition = std::vector<std::vector<VertexId>>;

TEST_SUITE("scc") {

TEST_CASE("disjoint sets keep the designated name") {
    DisjointSets s(5);
    CHECK(s.find(3) == 3);
    s.link(1, 2);
    CHECK(s.find(2) == 1);
    CHECK(s.find(s.find(2)) == s.find(2));
    s.link(1, 0);
    CHECK(s.find(0) == 1);
    s.link(4, 1);  // the smaller-rank side names the union
    for (VertexId v : {0U, 1U, 2U, 4U}) {
        CHECK(s.find(v) == 4);
    }
    CHECK(s.is_canonical(4));
    CHECK_FALSE(s.is_canonical(1));
    CHECK_THROWS_AS(s.link(1, 3), UsageError);
    CHECK_THROWS_AS(s.link(4, 4), UsageError);
    CHECK_THROWS_AS(s.find(7), UsageError);
    CHECK(s.add() == 5);
    CHECK(s.find(5) == 5);
}

TEST_CASE("chained links") {
    DisjointSets s(3);
    s.link(0, 1);
    s.link(0, 2);
    CHECK(s.find(1) == 0);
    CHECK(s.find(2) == 0);
}

TEST_CASE("pair matrix journal") {
    for (std::size_t limit : {std::size_t{8192}, std::size_t{0}}) {
        PairMatrix m(10, limit);
        CHECK(m.hashed() == (limit == 0));
        m.set(2, 3);
        m.set(2, 3);
        m.set(9, 0);
        CHECK(m.test(2, 3));
        CHECK_FALSE(m.test(3, 2));
        CHECK(m.set_count() == 2);
        m.clear();
        CHECK(m.set_count() == 0);
        CHECK_FALSE(m.test(2, 3));
        CHECK_FALSE(m.test(9, 0));
    }
}

TEST_CASE("sparse: two-cycle merges into the head's component") {
    SccSparseEngine e(3);
    CHECK(e.insert_arc(0, 1).kind == OutcomeKind::accepted);
    const InsertionOutcome o = e.insert_arc(1, 0);
    REQUIRE(o.kind == OutcomeKind::components_merged);
    CHECK(o.canonical == 0);
    CHECK(o.merged == std::vector<VertexId>{0, 1});
    CHECK(e.components_snapshot() == Partition{{0, 1}, {2}});
    CHECK(e.insert_arc(0, 1).kind == OutcomeKind::no_op);
    CHECK(e.insert_arc(2, 2).kind == OutcomeKind::no_op);
    CHECK(e.matrix_bits_set() == 0);
}

TEST_CASE("sparse: triangle") {
    SccSparseEngine e(3);
    e.insert_arc(0, 1);
    e.insert_arc(1, 2);
    const InsertionOutcome o = e.insert_arc(2, 0);
    REQUIRE(o.kind == OutcomeKind::components_merged);
    CHECK(o.merged == std::vector<VertexId>{0, 1, 2});
    CHECK(e.components_snapshot() == Partition{{0, 1, 2}});
}

TEST_CASE("sparse: repeated arcs are deleted on first sight") {
    SccSparseEngine e(4, 16);
    REQUIRE(e.delta() == 3);
    e.insert_arc(1, 2);
    e.insert_arc(1, 2);
    e.insert_arc(2, 0);
    CHECK(e.last_backward_arcs() == 1);
    const auto before = e.counters().arc_traversals;
    const InsertionOutcome o = e.insert_arc(0, 1);
    REQUIRE(o.kind == OutcomeKind::components_merged);
    CHECK(o.canonical == 1);
    // (2,0) and one copy of (1,2); the deleted copy is never looked at again.
    CHECK(e.counters().arc_traversals - before == 2);
    CHECK(e.components_snapshot() == Partition{{0, 1, 2}, {3}});
}

TEST_CASE("dense: two-cycle") {
    SccDenseEngine e(3);
    e.insert_arc(0, 1);
    const InsertionOutcome o = e.insert_arc(1, 0);
    REQUIRE(o.kind == OutcomeKind::components_merged);
    CHECK(o.canonical == 0);
    CHECK(e.level(0) >= 2);
    CHECK(e.find(1) == 0);
    CHECK(e.components_snapshot() == Partition{{0, 1}, {2}});
}

TEST_CASE("dense: long cycle inserted in order") {
    SccDenseEngine e(10);
    for (VertexId v = 0; v < 9; ++v) {
        CHECK(e.insert_arc(v, v + 1).kind == OutcomeKind::accepted);
    }
    CHECK(e.insert_arc(9, 0).kind == OutcomeKind::components_merged);
    CHECK(e.components_snapshot().size() == 1);
}

TEST_CASE("dense: arcs inside a component are dropped") {
    SccDenseEngine e(3);
    e.insert_arc(0, 1);
    e.insert_arc(1, 0);
    const std::size_t stored = e.stored_arcs();
    CHECK(stored == 0);
    CHECK(e.insert_arc(1, 0).kind == OutcomeKind::no_op);
    CHECK(e.stored_arcs() == stored);
    e.insert_arc(1, 2);
    CHECK(e.stored_arcs() == 1);
}

TEST_CASE("dense: component found through a cross arc seen early") {
    // z->a, z->b, b->a, a->u with u before z; the search reaches a from z
    // before b, and only the arc b->a connects b to the cycle.
    const VertexId z = 1, a = 3, b = 2, u = 4;
    SccDenseEngine e(5);
    e.insert_arc(z, b);
    e.insert_arc(z, a);
    e.insert_arc(b, a);
    e.insert_arc(a, u);
    const InsertionOutcome o = e.insert_arc(u, z);
    REQUIRE(o.kind == OutcomeKind::components_merged);
    CHECK(o.merged == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(e.components_snapshot() == Partition{{0}, {1, 2, 3, 4}});
}

TEST_CASE("sparse: backward vertex reached only by a non-tree arc joins") {
    SccSparseEngine e(6, 22);
    REQUIRE(e.delta() == 4);
    const Arc arcs[] = {{5, 4}, {0, 5}, {1, 3}, {0, 2}, {0, 4}, {4, 3},
                        {2, 4}, {4, 1}, {4, 2}, {2, 3}, {3, 0}};
    for (Arc a : arcs) {
        e.insert_arc(a.tail, a.head);
    }
    CHECK(e.components_snapshot() == Partition{{0, 1, 2, 3, 4, 5}});
}

TEST_CASE("dense: an arc met again after its tail rises is kept") {
    SccDenseEngine e(6);
    const Arc arcs[] = {{2, 3}, {2, 5}, {1, 4}, {3, 0}, {1, 0}, {5, 3}, {4, 3}, {4, 2}};
    for (Arc a : arcs) {
        e.insert_arc(a.tail, a.head);
    }
    for (Arc a : arcs) {
        CHECK(e.level(a.tail) < e.level(a.head));
    }
    const auto out = e.insert_arc(0, 3);
    CHECK(out.kind == OutcomeKind::components_merged);
    CHECK(e.find(0) == e.find(3));
}

TEST_CASE("snapshots") {
    SccSparseEngine s(3);
    SccDenseEngine d(3);
    CHECK(s.components_snapshot() == Partition{{0}, {1}, {2}});
    CHECK(d.components_snapshot() == Partition{{0}, {1}, {2}});
    CHECK(SccSparseEngine(0).components_snapshot().empty());
}

TEST_CASE("unknown vertices") {
    SccSparseEngine s(2);
    SccDenseEngine d(2);
    CHECK_THROWS_AS(s.insert_arc(0, 2), UsageError);
    CHECK_THROWS_AS(d.insert_arc(2, 0), UsageError);
    CHECK_THROWS_AS(s.find(4), UsageError);
    CHECK_THROWS_AS(d.level(4), UsageError);
}

TEST_CASE("both engines track the oracle partition on random streams") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        SplitMix64 rng(seed);
        const std::size_t n = 2 + rng.below(30);
        const std::size_t m = 1 + rng.below(std::min<std::size_t>(n * (n - 1), 250));
        const ArcStream stream = gen_random_stream(n, m, seed);
        // Low matrix limits exercise the hashed representation as well.
        SccSparseEngine sparse(n, m, seed % 2 == 0 ? 0 : 8192);
        SccDenseEngine dense(n, seed % 3 == 0 ? 0 : 8192);
        StaticGraph g(n);
        std::size_t merges = 0;
        std::vector<Arc> seen;
        const std::size_t cap_sqrt = ceil_sqrt(m);
        std::size_t cap_two = 1;
        while (cap_two * cap_two * cap_two < 8 * n * n) {
            ++cap_two;
        }
        const Level cap = static_cast<Level>(std::min(cap_sqrt, cap_two)) + 1;
        for (Arc a : stream.events) {
            g.add_arc(a.tail, a.head);
            const auto os = sparse.insert_arc(a.tail, a.head);
            const auto od = dense.insert_arc(a.tail, a.head);
            CHECK(os.kind == od.kind);
            merges += os.kind == OutcomeKind::components_merged;
            const Partition expected = normalize_partition(tarjan_scc(g));
            REQUIRE(sparse.components_snapshot() == expected);
            REQUIRE(dense.components_snapshot() == expected);
            REQUIRE(sparse.matrix_bits_set() == 0);
            REQUIRE(dense.matrix_bits_set() == 0);
            REQUIRE(sparse.max_level() <= cap);
            seen.push_back(a);
            for (Arc b : seen) {
                if (sparse.find(b.tail) != sparse.find(b.head)) {
                    REQUIRE(sparse.order_key(b.tail) < sparse.order_key(b.head));
                }
            }
        }
        // Cross-component arcs respect the order (sparse) and levels (dense).
        for (Arc a : stream.events) {
            if (sparse.find(a.tail) != sparse.find(a.head)) {
                CHECK(sparse.order_key(a.tail) < sparse.order_key(a.head));
                CHECK(dense.level(a.tail) < dense.level(a.head));
            }
        }
        for (VertexId v = 0; v < n; ++v) {
            CHECK(dense.level(v) <= static_cast<Level>(size_of(g, v)));
        }
        CHECK(sparse.components_created() <= 2 * n - 1);
        CHECK(dense.components_created() <= 2 * n - 1);
        CHECK(sparse.components_created() == n + merges);
        CHECK(dense.watermark_violations() == 0);
    }
}

}
