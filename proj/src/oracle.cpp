#include "dyntopo/oracle.hpp"

#include <algorithm>
#include <string>

namespace dyntopo {

StaticGraph::StaticGraph(std::size_t vertices, std::span<const Arc> arcs)
    : n(vertices), adjacency(vertices) {
    for (const Arc& a : arcs) {
        add_arc(a.tail, a.head);
    }
}

void StaticGraph::add_arc(VertexId tail, VertexId head) {
    if (tail >= n || head >= n) {
        throw UsageError("arc endpoint out of range");
    }
    adjacency[tail].push_back(head);
}

namespace {

struct Frame {
    VertexId vertex;
    std::size_t next;
};

} // namespace

ToposortResult static_toposort(const StaticGraph& g) {
    enum : char { white, grey, black };
    std::vector<char> colour(g.n, white);
    std::vector<VertexId> post;
    post.reserve(g.n);
    std::vector<Frame> stack;
    for (std::size_t r = g.n; r-- > 0;) {
        if (colour[r] != white) {
            continue;
        }
        colour[r] = grey;
        stack.push_back(Frame{static_cast<VertexId>(r), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& out = g.adjacency[f.vertex];
            if (f.next == out.size()) {
                colour[f.vertex] = black;
                post.push_back(f.vertex);
                stack.pop_back();
                continue;
            }
            const VertexId y = out[f.next++];
            if (colour[y] == grey) {
                WitnessCycle c;
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [y](const Frame& s) { return s.vertex == y; });
                for (; it != stack.end(); ++it) {
                    c.vertices.push_back(it->vertex);
                }
                return {std::nullopt, std::move(c)};
            }
            if (colour[y] == white) {
                colour[y] = grey;
                stack.push_back(Frame{y, 0});
            }
        }
    }
    std::reverse(post.begin(), post.end());
    return {std::move(post), std::nullopt};
}

std::vector<std::vector<VertexId>> tarjan_scc(const StaticGraph& g) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> number(g.n, unvisited);
    std::vector<std::size_t> low(g.n, 0);
    std::vector<char> on_stack(g.n, 0);
    std::vector<VertexId> pending;
    std::vector<Frame> stack;
    std::vector<std::vector<VertexId>> components;
    std::size_t counter = 0;

    for (std::size_t r = g.n; r-- > 0;) {
        if (number[r] != unvisited) {
            continue;
        }
        auto enter = [&](VertexId x) {
            number[x] = low[x] = counter++;
            pending.push_back(x);
            on_stack[x] = 1;
            stack.push_back(Frame{x, 0});
        };
        enter(static_cast<VertexId>(r));
        while (!stack.empty()) {
            Frame& f = stack.back();
            const VertexId x = f.vertex;
            const auto& out = g.adjacency[x];
            if (f.next < out.size()) {
                const VertexId y = out[f.next++];
                if (number[y] == unvisited) {
                    enter(y);
                } else if (on_stack[y]) {
                    low[x] = std::min(low[x], number[y]);
                }
                continue;
            }
            stack.pop_back();
            if (!stack.empty()) {
                const VertexId p = stack.back().vertex;
                low[p] = std::min(low[p], low[x]);
            }
            if (low[x] == number[x]) {
                std::vector<VertexId> comp;
                VertexId t;
                do {
                    t = pending.back();
                    pending.pop_back();
                    on_stack[t] = 0;
                    comp.push_back(t);
                } while (t != x);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    std::reverse(components.begin(), components.end());
    return components;
}

std::vector<std::vector<VertexId>> normalize_partition(std::vector<std::vector<VertexId>> parts) {
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
    }
    std::erase_if(parts, [](const auto& p) { return p.empty(); });
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

std::size_t size_of(const StaticGraph& g, VertexId v) {
    if (v >= g.n) {
        throw UsageError("unknown vertex " + std::to_string(v));
    }
    std::vector<std::vector<VertexId>> reverse(g.n);
    for (VertexId x = 0; x < g.n; ++x) {
        for (VertexId y : g.adjacency[x]) {
            reverse[y].push_back(x);
        }
    }
    std::vector<char> seen(g.n, 0);
    std::vector<VertexId> queue{v};
    seen[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId x : reverse[queue[head]]) {
            if (!seen[x]) {
                seen[x] = 1;
                queue.push_back(x);
            }
        }
    }
    return queue.size();
}

std::optional<std::size_t> first_cycle_index(const ArcStream& stream) {
    StaticGraph g(stream.vertex_count());
    for (std::size_t i = 0; i < stream.events.size(); ++i) {
        g.add_arc(stream.events[i].tail, stream.events[i].head);
        if (!static_toposort(g).acyclic()) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace dyntopo
