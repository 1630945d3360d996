#include "dyntopo/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <unordered_set>

namespace dyntopo {

std::size_t ArcStream::vertex_count() const {
    if (declared_n) {
        return *declared_n;
    }
    std::size_t n = 0;
    for (const Arc& a : events) {
        n = std::max<std::size_t>(n, std::max(a.tail, a.head) + std::size_t{1});
    }
    return n;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') {
            ++end;
        }
        if (end > pos) {
            fields.push_back(line.substr(pos, end - pos));
        }
        pos = end;
    }
    return fields;
}

template <class Int>
bool parse_integer(std::string_view field, Int& out) {
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size();
}

} // namespace

ArcStream parse_arc_stream(std::string_view text) {
    ArcStream stream;
    std::size_t line_no = 0;
    bool seen_content = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }
        if (fields.front() == "p") {
            if (seen_content) {
                throw ParseError(line_no, "header must be the first non-comment line");
            }
            std::size_t n = 0, m = 0;
            if (fields.size() != 3 || !parse_integer(fields[1], n) || !parse_integer(fields[2], m)) {
                throw ParseError(line_no, "malformed header, expected \"p n m\"");
            }
            stream.declared_n = n;
            stream.declared_m = m;
            seen_content = true;
            continue;
        }
        seen_content = true;
        Arc arc;
        if (fields.size() != 2 || !parse_integer(fields[0], arc.tail) ||
            !parse_integer(fields[1], arc.head) || arc.tail == kNoVertex || arc.head == kNoVertex) {
            throw ParseError(line_no, "malformed arc, expected \"u v\"");
        }
        if (stream.declared_n && (arc.tail >= *stream.declared_n || arc.head >= *stream.declared_n)) {
            throw BoundsError(line_no, "endpoint out of range for declared n = " +
                                           std::to_string(*stream.declared_n));
        }
        stream.events.push_back(arc);
    }
    return stream;
}

std::string serialize_arc_stream(const ArcStream& stream) {
    std::string out;
    if (stream.declared_n) {
        out += "p " + std::to_string(*stream.declared_n) + ' ' +
               std::to_string(stream.declared_m.value_or(stream.events.size())) + '\n';
    }
    for (const Arc& a : stream.events) {
        out += std::to_string(a.tail);
        out += ' ';
        out += std::to_string(a.head);
        out += '\n';
    }
    return out;
}

bool witness_is_valid(const WitnessCycle& cycle, std::span<const Arc> stored, Arc trigger) {
    const auto& vs = cycle.vertices;
    if (vs.empty()) {
        return false;
    }
    std::unordered_set<std::uint64_t> arcs;
    arcs.reserve(stored.size() * 2 + 1);
    for (const Arc& a : stored) {
        arcs.insert(arc_key(a.tail, a.head));
    }
    arcs.insert(arc_key(trigger.tail, trigger.head));
    bool uses_trigger = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        VertexId from = vs[i];
        VertexId to = vs[(i + 1) % vs.size()];
        if (!arcs.contains(arc_key(from, to))) {
            return false;
        }
        uses_trigger = uses_trigger || (Arc{from, to} == trigger);
    }
    return uses_trigger;
}

std::string_view to_string(OutcomeKind kind) {
    switch (kind) {
    case OutcomeKind::accepted: return "accepted";
    case OutcomeKind::cycle_detected: return "cycle_detected";
    case OutcomeKind::components_merged: return "components_merged";
    case OutcomeKind::no_op: return "no_op";
    }
    return "unknown";
}

int floor_log2(std::uint64_t x) {
    return 63 - std::countl_zero(x);
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
    auto d = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (d > 0 && (d - 1) * (d - 1) >= x) {
        --d;
    }
    while (d * d < x) {
        ++d;
    }
    return d;
}

std::uint64_t ceil_two_thirds_power(std::uint64_t x) {
    const auto sq = static_cast<unsigned __int128>(x) * x;
    auto d = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(sq)));
    auto cube = [](std::uint64_t v) { return static_cast<unsigned __int128>(v) * v * v; };
    while (d > 0 && cube(d - 1) >= sq) {
        --d;
    }
    while (cube(d) < sq) {
        ++d;
    }
    return d;
}

} // namespace dyntopo
