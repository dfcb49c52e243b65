#ifndef LGP_DAG_HPP
#define LGP_DAG_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgp/graph.hpp"
#include "lgp/product.hpp"

namespace lgp {

template <class G>
concept Digraph = requires(const G& g, Vertex v) {
    { g.vertex_count() } -> std::convertible_to<std::size_t>;
    { g.out(v) } -> std::convertible_to<std::span<const Vertex>>;
    { g.in(v) } -> std::convertible_to<std::span<const Vertex>>;
};

class CycleError : public Error {
public:
    explicit CycleError(Edge back_edge)
        : Error("graph has a cycle through edge " + std::to_string(back_edge.first) + " -> " +
                std::to_string(back_edge.second)),
          back_edge_(back_edge) {}

    Edge back_edge() const noexcept { return back_edge_; }

private:
    Edge back_edge_;
};

namespace detail {

inline bool alive(const VertexMask& removed, Vertex v) {
    return removed.empty() || !removed[v];
}

}  // namespace detail

// Kahn's algorithm over the vertices not in `removed`; ties go to the smallest
// index. Throws CycleError naming one edge that lies on a cycle.
template <Digraph G>
std::vector<Vertex> topo_order(const G& g, const VertexMask& removed = {}) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<std::size_t> indegree(n, 0);
    std::size_t alive_count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!detail::alive(removed, v)) {
            continue;
        }
        ++alive_count;
        for (auto w : g.in(v)) {
            indegree[v] += detail::alive(removed, w);
        }
    }
    std::vector<Vertex> order;
    order.reserve(alive_count);
    std::deque<Vertex> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (detail::alive(removed, v) && indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    while (!ready.empty()) {
        const Vertex v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (auto w : g.out(v)) {
            if (detail::alive(removed, w) && --indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    if (order.size() == alive_count) {
        return order;
    }
    // every leftover vertex keeps a leftover in-neighbor; walk backwards until
    // a vertex repeats to close a cycle
    Vertex start = 0;
    while (!detail::alive(removed, start) || indegree[start] == 0) {
        ++start;
    }
    std::vector<Vertex> seen_at(n, no_vertex);
    Vertex v = start;
    Vertex step = 0;
    while (true) {
        seen_at[v] = step++;
        Vertex pred = no_vertex;
        for (auto w : g.in(v)) {
            if (detail::alive(removed, w) && indegree[w] > 0) {
                pred = w;
                break;
            }
        }
        if (seen_at[pred] != no_vertex) {
            throw CycleError({pred, v});
        }
        v = pred;
    }
}

template <Digraph G>
bool is_acyclic(const G& g, const VertexMask& removed = {}) {
    try {
        topo_order(g, removed);
        return true;
    } catch (const CycleError&) {
        return false;
    }
}

/*
 * Longest paths (in edges) starting at / ending at every vertex of an acyclic
 * graph restricted to the vertices not in `removed`. `next` and `prev` realize
 * the optimum; among equal candidates the smallest vertex index is kept.
 * Removed vertices keep length 0 and no pointers.
 */
struct LongestPathTable {
    std::vector<std::size_t> from;
    std::vector<std::size_t> to;
    std::vector<Vertex> next;
    std::vector<Vertex> prev;
};

template <Digraph G>
LongestPathTable longest_paths(const G& g, const VertexMask& removed = {}) {
    const auto order = topo_order(g, removed);
    const auto n = g.vertex_count();
    LongestPathTable t{std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0),
                       std::vector<Vertex>(n, no_vertex), std::vector<Vertex>(n, no_vertex)};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        for (auto w : g.out(v)) {
            if (detail::alive(removed, w) && (t.next[v] == no_vertex || t.from[w] + 1 > t.from[v])) {
                t.from[v] = t.from[w] + 1;
                t.next[v] = w;
            }
        }
    }
    for (const Vertex v : order) {
        for (auto w : g.in(v)) {
            if (detail::alive(removed, w) && (t.prev[v] == no_vertex || t.to[w] + 1 > t.to[v])) {
                t.to[v] = t.to[w] + 1;
                t.prev[v] = w;
            }
        }
    }
    return t;
}

// the path realizing t.from[v], starting at v
Walk forward_path(const LongestPathTable& t, Vertex v);
// the path realizing t.to[v], ending at v
Walk backward_path(const LongestPathTable& t, Vertex v);

struct Occurrence {
    Walk walk;
    LabelString string;
};

// Two walks spelling the same string of `length` characters. For LCSP the
// walks live in the first and second factor; for LRSP both live in the input
// graph and differ at some index. Length 0 carries no walks.
struct WitnessPair {
    std::size_t length = 0;
    LabelString string;
    Walk first;
    Walk second;
};

// An occurrence of a non-empty pattern in a directed graph (cycles allowed).
std::optional<Occurrence> smlg(const LabeledGraph& g, std::span<const Label> pattern);

WitnessPair lcsp_dag(const ProductGraph& p, const VertexMask& removed = {});

// per left vertex: characters of the longest walk matched in the right graph
std::vector<std::size_t> msp_dag(const ProductGraph& p, const VertexMask& removed = {});

// Longest path through a vertex of `diff` (normally off_diagonal(p) of a
// self-product), projected to two distinct walks.
WitnessPair lrsp_dag(const ProductGraph& p, const VertexMask& diff,
                     const VertexMask& removed = {});

}  // namespace lgp

#endif
