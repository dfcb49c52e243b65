#ifndef LGP_REDUCTIONS_HPP
#define LGP_REDUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lgp/graph.hpp"

namespace lgp {

using BitVector = std::vector<std::uint8_t>;

struct OVInstance {
    std::vector<BitVector> a;
    std::vector<BitVector> b;
    std::size_t dimension = 0;
};

// Throws Error unless |A| = |B| >= 1, every vector has the same length d >= 1,
// entries are 0/1 and the vectors of A are pairwise distinct.
void validate(const OVInstance& inst);

// half-open vertex range [begin, end) of one gadget in a generated graph
struct GadgetRange {
    std::string name;
    Vertex begin = 0;
    Vertex end = 0;
};

struct ReductionOutput {
    LabeledGraph graph;
    std::size_t threshold = 0;
    // ceil(log2 n) for the OV constructions, 0 otherwise
    std::size_t k = 0;
    std::vector<GadgetRange> gadgets;
};

/*
 * Vertex numbering of G': the vertices of g, then gadget H1 (n path vertices
 * labeled L(0), then n level vertices with fresh labels base..base+n-1),
 * then H2 laid out the same way, then the pattern path.
 */
ReductionOutput smlg_to_lrsp(const LabeledGraph& g, std::span<const Label> pattern);

/*
 * G_A then G_B. G_A: source of U, the k levels of U (0 then 1), the trie root
 * and the trie nodes in creation order. G_B: the tree T in heap order, then
 * the gadget of each b in order (source, then each level 0 before 1).
 * The c label is already relabeled 0.
 */
ReductionOutput ov_to_lrsp(const OVInstance& inst);

struct OVPair {
    LabeledGraph g1;
    LabeledGraph g2;
    Vertex v1 = 0;
    Vertex v2 = 0;
    std::size_t threshold = 0;
    std::size_t k = 0;
};

// g1 = G_B, g2 = G_A
OVPair ov_to_lcsp(const OVInstance& inst);
// same graphs, v1 = root of T, v2 = source of U
OVPair ov_to_msp_star(const OVInstance& inst);

bool ov_brute(const OVInstance& inst);

std::size_t ceil_log2(std::size_t n);

// One 0/1 row per vector ("0 1 1" or "011"), the A block, a blank line, the B block.
OVInstance parse_ov(std::istream& in);
OVInstance parse_ov(const std::string& text);

// Random instance with n distinct A vectors; each entry is 1 with probability
// `density`. Requires n <= 2^d.
OVInstance random_ov(std::size_t n, std::size_t d, std::uint64_t seed, double density = 0.5);

}  // namespace lgp

#endif
