#ifndef SUBDIV_TESTUTIL_HPP
#define SUBDIV_TESTUTIL_HPP

// Reference implementations written in the dumbest correct way available,
// plus a few standard graphs. The point is independence: nothing here
// shares search order, pruning, or data layout with the real code.

#include <algorithm>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/json_report.hpp"

namespace testutil {

using namespace subdiv;

inline std::uint32_t naive_codegree(const BipartiteGraph &g, VertexId u,
                                    VertexId v) {
    std::uint32_t c = 0;
    for (VertexId b = g.num_a(); b < g.num_vertices(); ++b)
        if (g.has_edge(u, b) && g.has_edge(v, b))
            ++c;
    return c;
}

namespace detail {

inline bool extend_map(const GeneralGraph &g, const GeneralGraph &h,
                       std::vector<VertexId> &img, std::vector<bool> &used) {
    const VertexId next = static_cast<VertexId>(img.size());
    if (next == h.num_vertices())
        return true;
    for (VertexId cand = 0; cand < g.num_vertices(); ++cand) {
        if (used[cand])
            continue;
        bool ok = true;
        for (VertexId prev = 0; prev < next && ok; ++prev)
            if (h.has_edge(prev, next) && !g.has_edge(img[prev], cand))
                ok = false;
        if (!ok)
            continue;
        used[cand] = true;
        img.push_back(cand);
        if (extend_map(g, h, img, used))
            return true;
        img.pop_back();
        used[cand] = false;
    }
    return false;
}

} // namespace detail

// Subgraph containment by trying injective maps in plain id order.
inline bool naive_contains(const GeneralGraph &g, const GeneralGraph &h) {
    if (h.num_vertices() > g.num_vertices())
        return false;
    std::vector<VertexId> img;
    std::vector<bool> used(g.num_vertices(), false);
    return detail::extend_map(g, h, img, used);
}

// Max edges over every one of the 2^C(n,2) graphs on n vertices. Usable to
// n = 6 or so; this is the oracle the oracle is judged against.
inline std::uint64_t naive_extremal(std::uint32_t n, const GeneralGraph &h) {
    std::vector<Edge> slots;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        const auto bits = static_cast<std::uint64_t>(__builtin_popcountll(mask));
        if (bits <= best)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(slots[i]);
        if (!naive_contains(GeneralGraph::build(n, edges), h))
            best = bits;
    }
    return best;
}

inline GeneralGraph cycle(std::uint32_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return GeneralGraph::build(n, e);
}

inline GeneralGraph path(std::uint32_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return GeneralGraph::build(n, e);
}

inline GeneralGraph complete(std::uint32_t n) {
    std::vector<Edge> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return GeneralGraph::build(n, e);
}

inline GeneralGraph petersen() {
    std::vector<Edge> e;
    for (VertexId v = 0; v < 5; ++v) {
        e.emplace_back(v, (v + 1) % 5);          // outer C5
        e.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        e.emplace_back(v, 5 + v);                // spokes
    }
    return GeneralGraph::build(10, e);
}

inline GeneralGraph hypercube(std::uint32_t d) {
    std::vector<Edge> e;
    const VertexId n = 1u << d;
    for (VertexId v = 0; v < n; ++v)
        for (std::uint32_t bit = 0; bit < d; ++bit)
            if ((v ^ (1u << bit)) > v)
                e.emplace_back(v, v ^ (1u << bit));
    return GeneralGraph::build(n, e);
}

inline BipartiteGraph complete_bip(std::uint32_t a, std::uint32_t b) {
    std::vector<Edge> e;
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v)
            e.emplace_back(u, a + v);
    return BipartiteGraph::build(a, b, e);
}

// Just enough of JSON Schema to check schemas/report.schema.json: type,
// const, enum, required, properties, additionalProperties:false, pattern,
// minimum. Returns the first violation, or nullopt when the doc conforms.
inline std::optional<std::string> schema_violation(const Json &schema,
                                                   const Json &doc,
                                                   const std::string &at = "$") {
    auto type_ok = [&](const std::string &t) {
        if (t == "object") return doc.is_object();
        if (t == "array") return doc.is_array();
        if (t == "string") return doc.is_string();
        if (t == "integer") return doc.is_number_integer();
        if (t == "number") return doc.is_number();
        if (t == "boolean") return doc.is_boolean();
        return false;
    };
    if (schema.contains("type")) {
        const auto &ty = schema["type"];
        bool ok = false;
        if (ty.is_string())
            ok = type_ok(ty.get<std::string>());
        else
            for (const auto &t : ty)
                ok = ok || type_ok(t.get<std::string>());
        if (!ok)
            return at + ": wrong type";
    }
    if (schema.contains("const") && doc != schema["const"])
        return at + ": const mismatch";
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto &v : schema["enum"])
            ok = ok || doc == v;
        if (!ok)
            return at + ": not in enum";
    }
    if (schema.contains("pattern") && doc.is_string() &&
        !std::regex_search(doc.get<std::string>(),
                           std::regex(schema["pattern"].get<std::string>())))
        return at + ": pattern mismatch";
    if (schema.contains("minimum") && doc.is_number() &&
        doc.get<double>() < schema["minimum"].get<double>())
        return at + ": below minimum";
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto &k : schema["required"])
                if (!doc.contains(k.get<std::string>()))
                    return at + ": missing " + k.get<std::string>();
        const bool closed = schema.contains("additionalProperties") &&
                            schema["additionalProperties"].is_boolean() &&
                            !schema["additionalProperties"].get<bool>();
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            const bool known = schema.contains("properties") &&
                               schema["properties"].contains(it.key());
            if (known) {
                if (auto err =
                        schema_violation(schema["properties"][it.key()],
                                         it.value(), at + "." + it.key()))
                    return err;
            } else if (closed) {
                return at + ": unexpected key " + it.key();
            }
        }
    }
    return std::nullopt;
}

} // namespace testutil

#endif
