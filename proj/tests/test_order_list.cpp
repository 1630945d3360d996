#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dyntopo/order_list.hpp"
#include "dyntopo/workloads.hpp"

using namespace dyntopo;

TEST_SUITE("order_list") {

TEST_CASE("starts in id order on level one") {
    LevelOrderedList list(4);
    CHECK(list.to_vector() == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(list.front() == 0);
    CHECK(list.next(3) == kNoVertex);
    CHECK(list.level(2) == 1);
}

TEST_CASE("moves land at the front of the target level") {
    LevelOrderedList list(4);
    list.move_to_level_front(1, 3);
    CHECK(list.to_vector() == std::vector<VertexId>{0, 2, 3, 1});
    list.move_to_level_front(0, 2);
    CHECK(list.to_vector() == std::vector<VertexId>{2, 3, 0, 1});
    list.move_to_level_front(3, 3);
    CHECK(list.to_vector() == std::vector<VertexId>{2, 0, 3, 1});
    list.move_to_level_front(1, 3);
    CHECK(list.to_vector() == std::vector<VertexId>{2, 0, 1, 3});
    list.push_front_new(4);
    CHECK(list.to_vector() == std::vector<VertexId>{4, 2, 0, 1, 3});
}

TEST_CASE("agrees with sorting by level and index under random moves") {
    SplitMix64 rng(7);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 1 + rng.below(40);
        LevelOrderedList list(n);
        std::vector<Level> level(n, 1);
        std::vector<Index> index(n);
        Index floor = -static_cast<Index>(n);
        for (std::size_t v = 0; v < n; ++v) {
            index[v] = static_cast<Index>(v) - static_cast<Index>(n);
        }
        for (int step = 0; step < 200; ++step) {
            if (rng.below(10) == 0) {
                const auto v = static_cast<VertexId>(level.size());
                list.push_front_new(v);
                level.push_back(1);
                index.push_back(--floor);
            } else {
                const auto v = static_cast<VertexId>(rng.below(level.size()));
                const Level to = level[v] + static_cast<Level>(rng.below(4));
                list.move_to_level_front(v, to);
                level[v] = to;
                index[v] = --floor;
            }
            std::vector<VertexId> expected(level.size());
            std::iota(expected.begin(), expected.end(), 0);
            std::sort(expected.begin(), expected.end(), [&](VertexId a, VertexId b) {
                return std::pair{level[a], index[a]} < std::pair{level[b], index[b]};
            });
            REQUIRE(list.to_vector() == expected);
        }
    }
}

}
