#ifndef LGP_UNDIRECTED_HPP
#define LGP_UNDIRECTED_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lgp/dag.hpp"
#include "lgp/general.hpp"
#include "lgp/graph.hpp"

namespace lgp {

// Walk occurrences on an undirected graph. A repeated string of two labels
// already yields an infinite one (back and forth along both edges), so the
// answer is infinite with r empty and s the two labels, or finite of length
// at most 1.
RepeatAnswer lrsp_undirected_walks(const LabeledGraph& g);

bool is_tree(const LabeledGraph& g);
// a tree with maximum degree 2 (a single vertex counts)
bool is_path_graph(const LabeledGraph& g);

// Path occurrences on an undirected path graph via the longest repeated
// substring (length >= 2) of T $ reverse(T); length 1 falls back to shared labels.
WitnessPair lrsp_undirected_path_paths(const LabeledGraph& g);

/*
 * Directed tree with n^2 + n vertices: a separator-labeled directed path
 * u_0 .. u_{n-1} (vertices 0..n-1) whose last vertex feeds the roots of the n
 * orientations of the tree. Copy i (rooted at tree vertex i) occupies
 * vertices n + i*n .. n + i*n + n - 1, tree vertex v sitting at n + i*n + v.
 */
struct TreeReduction {
    LabeledGraph graph;
    Label separator = 0;
    std::size_t tree_size = 0;
};

TreeReduction tree_reduction(const LabeledGraph& t);

// Path occurrences on an undirected tree, solved on tree_reduction(t).
WitnessPair lrsp_undirected_tree_paths(const LabeledGraph& t);

// Suffix array by prefix doubling with radix passes, O(n log n).
std::vector<std::size_t> suffix_array(std::span<const Label> text);
// lcp[i] = common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0 (Kasai).
std::vector<std::size_t> lcp_array(std::span<const Label> text, std::span<const std::size_t> sa);

}  // namespace lgp

#endif
