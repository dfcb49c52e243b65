#ifndef LGP_PRODUCT_HPP
#define LGP_PRODUCT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgp/graph.hpp"

namespace lgp {

struct ProductVertex {
    Vertex left;
    Vertex right;

    friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/*
 * The labeled direct product G1 (x) G2: vertex pairs with equal labels, and an
 * edge between two pairs iff both components are joined in their factor.
 *
 * Vertices are stored sorted by (left, right) and edges by (source, target),
 * so every product built from the same inputs is identical. The factor label
 * sequences are retained for index lookups; the factors themselves are not.
 */
class ProductGraph {
public:
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size(); }

    const ProductVertex& vertex(Vertex x) const { return vertices_[x]; }
    std::span<const ProductVertex> vertices() const noexcept { return vertices_; }
    Label label(Vertex x) const { return left_labels_[vertices_[x].left]; }

    std::span<const Vertex> out(Vertex x) const {
        return {targets_.data() + out_offsets_[x], out_offsets_[x + 1] - out_offsets_[x]};
    }
    std::span<const Vertex> in(Vertex x) const {
        return {sources_.data() + in_offsets_[x], in_offsets_[x + 1] - in_offsets_[x]};
    }
    bool has_edge(Vertex from, Vertex to) const;

    // edges in canonical (source, target) order
    std::vector<Edge> edges() const;

    std::optional<Vertex> index_of(Vertex left, Vertex right) const;

    std::size_t left_count() const noexcept { return left_labels_.size(); }
    std::size_t right_count() const noexcept { return right_labels_.size(); }
    bool is_self_product() const noexcept { return self_product_; }

    // elementary steps spent by the construction (sorting passes + output)
    std::size_t construction_steps() const noexcept { return construction_steps_; }

private:
    friend ProductGraph build_product(const LabeledGraph&, const LabeledGraph&);
    friend ProductGraph self_product(const LabeledGraph&);

    std::vector<ProductVertex> vertices_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Vertex> targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Vertex> sources_;

    std::vector<Label> left_labels_;
    std::vector<Label> right_labels_;
    // first product index with a given left component
    std::vector<std::size_t> left_offsets_{0};
    // position of a right vertex among the right vertices sharing its label
    std::vector<Vertex> right_rank_;
    bool self_product_ = false;
    std::size_t construction_steps_ = 0;
};

// Both factors must be directed. Runs in time linear in the input plus the
// alphabet plus the output.
ProductGraph build_product(const LabeledGraph& g1, const LabeledGraph& g2);
ProductGraph self_product(const LabeledGraph& g);

struct SizeEstimate {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;

    friend bool operator==(const SizeEstimate&, const SizeEstimate&) = default;
};

// |V'| = sum_a |V1^a| |V2^a| and |E'| = sum_{a,b} |E1^{a,b}| |E2^{a,b}|,
// computed from label and edge-label histograms without building the product.
SizeEstimate product_size(const LabeledGraph& g1, const LabeledGraph& g2);

enum class Side { left, right };

bool is_walk(const ProductGraph& p, std::span<const Vertex> walk);
Walk project(const ProductGraph& p, std::span<const Vertex> walk, Side side);
Walk lift(const ProductGraph& p, std::span<const Vertex> walk1, std::span<const Vertex> walk2);
LabelString spell(const ProductGraph& p, std::span<const Vertex> walk);

// the product vertices (u, v) with u != v
VertexMask off_diagonal(const ProductGraph& p);

}  // namespace lgp

#endif
