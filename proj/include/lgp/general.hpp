#ifndef LGP_GENERAL_HPP
#define LGP_GENERAL_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "lgp/dag.hpp"
#include "lgp/graph.hpp"
#include "lgp/product.hpp"

namespace lgp {

inline constexpr std::size_t infinite_length = std::numeric_limits<std::size_t>::max();

struct SccDecomposition {
    std::vector<std::size_t> component;
    std::size_t count = 0;
    // vertices on some cycle: in a multi-vertex component or carrying a self-loop
    VertexMask cyclic;
};

// Iterative Tarjan. Components are numbered in reverse topological order.
template <Digraph G>
SccDecomposition strongly_connected_components(const G& g) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const auto n = static_cast<Vertex>(g.vertex_count());
    SccDecomposition result{std::vector<std::size_t>(n, 0), 0, VertexMask(n, false)};
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    VertexMask on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> frames;
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        frames.emplace_back(root, 0);
        while (!frames.empty()) {
            const Vertex v = frames.back().first;
            const auto out = g.out(v);
            if (frames.back().second < out.size()) {
                const Vertex w = out[frames.back().second++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const Vertex parent = frames.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                std::size_t size = 0;
                auto top = stack.size();
                do {
                    --top;
                    ++size;
                } while (stack[top] != v);
                for (auto k = top; k < stack.size(); ++k) {
                    const Vertex w = stack[k];
                    on_stack[w] = false;
                    result.component[w] = result.count;
                    if (size >= 2) {
                        result.cyclic[w] = true;
                    }
                }
                stack.resize(top);
                ++result.count;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        const auto out = g.out(v);
        if (std::find(out.begin(), out.end(), v) != out.end()) {
            result.cyclic[v] = true;
        }
    }
    return result;
}

struct VertexClasses {
    VertexMask cyc;
    VertexMask diff;
    // diagonal pairs (v, v) where v has two equally labeled out-neighbors
    VertexMask ndet;
};

// `p` must be self_product(g).
VertexClasses classes(const ProductGraph& p, const LabeledGraph& g);

// Shortest path from some vertex of `from` to some vertex of `to` by
// multi-source BFS; a single vertex when the sets meet. Deterministic.
std::optional<Walk> reach_between(const ProductGraph& p, const VertexMask& from,
                                  const VertexMask& to);

// A closed walk through x, listed once from x (the edge back to x is implied).
std::optional<Walk> cycle_through(const ProductGraph& p, Vertex x);

// vertices from which some vertex of `targets` is reachable (including targets)
VertexMask reaching(const ProductGraph& p, const VertexMask& targets);

struct CommonAnswer {
    bool infinite = false;
    WitnessPair finite;
    // when infinite, period^omega occurs in both graphs along these closed walks
    LabelString period;
    Walk cycle1;
    Walk cycle2;
};

CommonAnswer lcsp_general(const LabeledGraph& g1, const LabeledGraph& g2);

// infinite_length marks vertices starting an infinite matched walk
std::vector<std::size_t> msp_general(const LabeledGraph& g1, const LabeledGraph& g2);

std::size_t msp_star(const LabeledGraph& g1, const LabeledGraph& g2, Vertex v1, Vertex v2);

enum class RepeatKind { finite, unbounded, infinite };

/*
 * Longest repeated string of a directed graph.
 *   finite:    `finite` holds the length and two distinct occurrences.
 *   unbounded: r^m s is repeated for every m >= 1 (r non-empty).
 *   infinite:  r s^omega is repeated (s non-empty, r possibly empty).
 * For the non-finite kinds lasso1/lasso2 are two distinct walks spelling r s.
 */
struct RepeatAnswer {
    RepeatKind kind = RepeatKind::finite;
    WitnessPair finite;
    LabelString r;
    LabelString s;
    Walk lasso1;
    Walk lasso2;
};

RepeatAnswer lrsp_general(const LabeledGraph& g);

// unbounded: r^m s; infinite: r s^m
LabelString expand_answer(const RepeatAnswer& answer, std::size_t m);

}  // namespace lgp

#endif
