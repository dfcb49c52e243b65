#ifndef LGP_GRAPH_HPP
#define LGP_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgp {

using Vertex = std::uint32_t;
using Label = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// a walk is a non-empty vertex sequence; its length is size() - 1 edges
using Walk = std::vector<Vertex>;
using LabelString = std::vector<Label>;

// membership flags indexed by vertex
using VertexMask = std::vector<bool>;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph / pattern / vector text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/*
 * A vertex-labeled graph over the integer alphabet [0, alphabet_size).
 *
 * Directed graphs may carry self-loops; undirected graphs may not. Edge sets
 * never contain duplicates ({u,v} and {v,u} are the same undirected edge).
 * For undirected graphs out() and in() both return the neighbor list.
 * Adjacency lists are sorted ascending. Immutable after construction.
 */
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(bool directed, Label alphabet_size, std::vector<Label> labels,
                 std::vector<Edge> edges);

    bool directed() const noexcept { return directed_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    Label alphabet_size() const noexcept { return alphabet_size_; }

    Label label(Vertex v) const { return labels_[v]; }
    std::span<const Label> labels() const noexcept { return labels_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> out(Vertex v) const;
    std::span<const Vertex> in(Vertex v) const;

    bool has_edge(Vertex from, Vertex to) const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.directed_ == b.directed_ && a.alphabet_size_ == b.alphabet_size_ &&
               a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    bool directed_ = true;
    Label alphabet_size_ = 0;
    std::vector<Label> labels_;
    std::vector<Edge> edges_;
    // CSR adjacency
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Vertex> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Vertex> in_sources_;
};

struct ParseOptions {
    // accept letters a..z as labels 0..25 (patterns may also be written "abc")
    bool letter_labels = false;
};

// Text format:
//   directed|undirected
//   <n> <m> [<sigma>]        (sigma defaults to max label + 1)
//   <n labels>
//   m lines "<u> <v>"
// Lines starting with '#' and blank lines are ignored.
LabeledGraph parse_graph(std::istream& in, const ParseOptions& options = {});
LabeledGraph parse_graph(const std::string& text, const ParseOptions& options = {});
std::string serialize(const LabeledGraph& g);

// one line of whitespace-separated labels; comments and blank lines skipped
LabelString parse_pattern(std::istream& in, const ParseOptions& options = {});
LabelString parse_pattern(const std::string& text, const ParseOptions& options = {});

bool is_walk(const LabeledGraph& g, std::span<const Vertex> walk);
LabelString spell(const LabeledGraph& g, std::span<const Vertex> walk);

struct NormalizationReport {
    std::vector<Vertex> isolated_vertices;
    bool has_shared_label = false;
    std::map<Label, std::size_t> label_histogram;
};

NormalizationReport normalize(const LabeledGraph& g);

struct Determinism {
    bool deterministic = true;
    // a vertex with two equally labeled out-neighbors
    std::optional<Vertex> witness;
};

Determinism is_deterministic(const LabeledGraph& g);

LabeledGraph symmetrize(const LabeledGraph& g);

// Convenience constructors used by tests, examples and reductions.
LabeledGraph labeled_path(std::span<const Label> labels, Label alphabet_size = 0);
LabeledGraph labeled_cycle(std::span<const Label> labels, Label alphabet_size = 0);

}  // namespace lgp

#endif
