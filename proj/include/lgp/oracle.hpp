#ifndef LGP_ORACLE_HPP
#define LGP_ORACLE_HPP

// Brute-force reference implementations, written straight from the problem
// definitions. Nothing here uses the product, DAG or general-graph modules,
// only the LabeledGraph data model. Meant for graphs of a handful of vertices.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "lgp/graph.hpp"

namespace lgp::oracle {

inline constexpr std::size_t default_walk_guard = 10'000'000;

struct OccurrenceIndex {
    std::size_t bound = 0;
    std::map<LabelString, std::set<Walk>> occurrences;
};

// every walk of 1..bound vertices; throws Error once more than `guard` walks
// would be expanded
OccurrenceIndex enumerate(const LabeledGraph& g, std::size_t bound,
                          std::size_t guard = default_walk_guard);

// number of distinct walks spelling s, saturating at cap
std::size_t count_occurrences(const LabeledGraph& g, std::span<const Label> s, std::size_t cap = 2);

// label-matching pairs of g1 x g2, i.e. the vertex count of the product
std::size_t matching_pairs(const LabeledGraph& g1, const LabeledGraph& g2);

struct Classification {
    bool finite = true;
    std::size_t length = 0;
};

// Finite(max repeated length) or not finite, decided by whether a repeated
// string of matching_pairs(g, g) + 1 vertices exists.
Classification brute_lrsp_classify(const LabeledGraph& g);

// naive self-product plus transitive closure: does an off-diagonal pair
// reach a pair lying on a cycle
bool brute_infinite_check(const LabeledGraph& g);

// longest common string, capped at `bound`
std::size_t brute_lcsp(const LabeledGraph& g1, const LabeledGraph& g2, std::size_t bound);

// per vertex of g1, capped at `bound`
std::vector<std::size_t> brute_msp(const LabeledGraph& g1, const LabeledGraph& g2, std::size_t bound);

std::size_t brute_msp_star(const LabeledGraph& g1, const LabeledGraph& g2, Vertex v1, Vertex v2,
                           std::size_t bound);

bool brute_smlg(const LabeledGraph& g, std::span<const Label> pattern);

struct NaiveProduct {
    std::vector<std::pair<Vertex, Vertex>> vertices;
    std::set<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> edges;
};

NaiveProduct naive_product(const LabeledGraph& g1, const LabeledGraph& g2);

// longest string spelled by two distinct paths (no repeated vertex) of an
// undirected graph; a path and its reverse count as two unless they coincide
std::size_t brute_lrsp_paths_undirected(const LabeledGraph& g);

}  // namespace lgp::oracle

#endif
