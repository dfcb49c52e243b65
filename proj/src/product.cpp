#include "lgp/product.hpp"

#include <algorithm>
#include <limits>

namespace lgp {

namespace {

struct LabeledEdge {
    Label from_label;
    Label to_label;
    Edge edge;
};

// Edges sorted by (label(u), label(v)) with two stable counting-sort passes.
std::vector<LabeledEdge> sort_by_label_pair(const LabeledGraph& g, Label sigma,
                                            std::size_t& steps) {
    std::vector<LabeledEdge> items;
    items.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        items.push_back({g.label(e.first), g.label(e.second), e});
    }
    std::vector<LabeledEdge> scratch(items.size());
    std::vector<std::size_t> count(static_cast<std::size_t>(sigma) + 1);
    for (int pass = 0; pass < 2; ++pass) {
        std::fill(count.begin(), count.end(), 0);
        auto key = [pass](const LabeledEdge& e) { return pass == 0 ? e.to_label : e.from_label; };
        for (const auto& e : items) {
            ++count[key(e) + 1];
        }
        for (std::size_t a = 0; a < sigma; ++a) {
            count[a + 1] += count[a];
        }
        for (const auto& e : items) {
            scratch[count[key(e)]++] = e;
        }
        items.swap(scratch);
        steps += 2 * items.size() + sigma;
    }
    return items;
}

// Visits every pair of maximal runs with equal (from_label, to_label) key.
template <class Fn>
void for_each_matching_group(const std::vector<LabeledEdge>& a, const std::vector<LabeledEdge>& b,
                             Fn&& fn) {
    auto key = [](const LabeledEdge& e) { return std::pair{e.from_label, e.to_label}; };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        auto ka = key(a[i]);
        auto kb = key(b[j]);
        if (ka < kb) {
            ++i;
        } else if (kb < ka) {
            ++j;
        } else {
            std::size_t i_end = i;
            while (i_end < a.size() && key(a[i_end]) == ka) {
                ++i_end;
            }
            std::size_t j_end = j;
            while (j_end < b.size() && key(b[j_end]) == kb) {
                ++j_end;
            }
            fn(i, i_end, j, j_end);
            i = i_end;
            j = j_end;
        }
    }
}

void counting_sort_edges(std::vector<Edge>& edges, std::size_t n, std::size_t& steps) {
    std::vector<Edge> scratch(edges.size());
    std::vector<std::size_t> count(n + 1);
    for (int pass = 0; pass < 2; ++pass) {
        std::fill(count.begin(), count.end(), 0);
        auto key = [pass](const Edge& e) { return pass == 0 ? e.second : e.first; };
        for (const auto& e : edges) {
            ++count[key(e) + 1];
        }
        for (std::size_t x = 0; x < n; ++x) {
            count[x + 1] += count[x];
        }
        for (const auto& e : edges) {
            scratch[count[key(e)]++] = e;
        }
        edges.swap(scratch);
        steps += 2 * edges.size() + n;
    }
}

void require_directed(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (!g1.directed() || !g2.directed()) {
        throw Error("the labeled product is defined here for directed graphs; symmetrize first");
    }
}

}  // namespace

ProductGraph build_product(const LabeledGraph& g1, const LabeledGraph& g2) {
    require_directed(g1, g2);
    ProductGraph p;
    std::size_t steps = 0;
    const Label sigma = std::max(g1.alphabet_size(), g2.alphabet_size());
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();

    p.left_labels_.assign(g1.labels().begin(), g1.labels().end());
    p.right_labels_.assign(g2.labels().begin(), g2.labels().end());

    // right vertices bucketed by label, ascending within each bucket
    std::vector<std::size_t> bucket(static_cast<std::size_t>(sigma) + 1, 0);
    for (Vertex v = 0; v < n2; ++v) {
        ++bucket[g2.label(v) + 1];
    }
    for (std::size_t a = 0; a < sigma; ++a) {
        bucket[a + 1] += bucket[a];
    }
    std::vector<Vertex> by_label(n2);
    p.right_rank_.assign(n2, 0);
    {
        std::vector<std::size_t> cursor(bucket.begin(), bucket.end() - 1);
        for (Vertex v = 0; v < n2; ++v) {
            const auto slot = cursor[g2.label(v)]++;
            by_label[slot] = v;
            p.right_rank_[v] = static_cast<Vertex>(slot - bucket[g2.label(v)]);
        }
    }
    steps += 2 * n2 + sigma;

    p.left_offsets_.assign(n1 + 1, 0);
    for (Vertex u = 0; u < n1; ++u) {
        const Label a = g1.label(u);
        if (a < sigma) {
            for (auto k = bucket[a]; k < bucket[a + 1]; ++k) {
                p.vertices_.push_back({u, by_label[k]});
            }
        }
        p.left_offsets_[u + 1] = p.vertices_.size();
        ++steps;
    }
    steps += p.vertices_.size();
    if (p.vertices_.size() >= std::numeric_limits<Vertex>::max()) {
        throw Error("product has too many vertices");
    }

    auto index = [&](Vertex u, Vertex v) {
        return static_cast<Vertex>(p.left_offsets_[u] + p.right_rank_[v]);
    };

    const auto e1 = sort_by_label_pair(g1, sigma, steps);
    const auto e2 = sort_by_label_pair(g2, sigma, steps);
    std::vector<Edge> edges;
    for_each_matching_group(e1, e2, [&](std::size_t i0, std::size_t i1, std::size_t j0,
                                        std::size_t j1) {
        for (auto i = i0; i < i1; ++i) {
            const auto [u, u2] = e1[i].edge;
            for (auto j = j0; j < j1; ++j) {
                const auto [v, v2] = e2[j].edge;
                edges.emplace_back(index(u, v), index(u2, v2));
            }
        }
    });
    steps += e1.size() + e2.size() + edges.size();

    const std::size_t n = p.vertices_.size();
    counting_sort_edges(edges, n, steps);

    p.out_offsets_.assign(n + 1, 0);
    p.in_offsets_.assign(n + 1, 0);
    p.targets_.resize(edges.size());
    p.sources_.resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        ++p.out_offsets_[edges[k].first + 1];
        ++p.in_offsets_[edges[k].second + 1];
        p.targets_[k] = edges[k].second;
    }
    for (std::size_t x = 0; x < n; ++x) {
        p.out_offsets_[x + 1] += p.out_offsets_[x];
        p.in_offsets_[x + 1] += p.in_offsets_[x];
    }
    // sources come out sorted because edges are visited in source order
    std::vector<std::size_t> cursor(p.in_offsets_.begin(), p.in_offsets_.end() - 1);
    for (const auto& [s, t] : edges) {
        p.sources_[cursor[t]++] = s;
    }
    steps += 3 * edges.size() + 2 * n;

    p.construction_steps_ = steps;
    return p;
}

ProductGraph self_product(const LabeledGraph& g) {
    ProductGraph p = build_product(g, g);
    p.self_product_ = true;
    return p;
}

bool ProductGraph::has_edge(Vertex from, Vertex to) const {
    if (from >= vertex_count() || to >= vertex_count()) {
        return false;
    }
    auto adj = out(from);
    return std::binary_search(adj.begin(), adj.end(), to);
}

std::vector<Edge> ProductGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count());
    for (Vertex x = 0; x < vertex_count(); ++x) {
        for (auto y : out(x)) {
            result.emplace_back(x, y);
        }
    }
    return result;
}

std::optional<Vertex> ProductGraph::index_of(Vertex left, Vertex right) const {
    if (left >= left_count() || right >= right_count() ||
        left_labels_[left] != right_labels_[right]) {
        return std::nullopt;
    }
    return static_cast<Vertex>(left_offsets_[left] + right_rank_[right]);
}

SizeEstimate product_size(const LabeledGraph& g1, const LabeledGraph& g2) {
    require_directed(g1, g2);
    const Label sigma = std::max(g1.alphabet_size(), g2.alphabet_size());
    std::vector<std::uint64_t> h1(sigma, 0);
    std::vector<std::uint64_t> h2(sigma, 0);
    for (auto a : g1.labels()) {
        ++h1[a];
    }
    for (auto a : g2.labels()) {
        ++h2[a];
    }
    SizeEstimate size;
    for (std::size_t a = 0; a < sigma; ++a) {
        size.vertex_count += h1[a] * h2[a];
    }
    std::size_t steps = 0;
    const auto e1 = sort_by_label_pair(g1, sigma, steps);
    const auto e2 = sort_by_label_pair(g2, sigma, steps);
    for_each_matching_group(e1, e2, [&](std::size_t i0, std::size_t i1, std::size_t j0,
                                        std::size_t j1) {
        size.edge_count += static_cast<std::uint64_t>(i1 - i0) * (j1 - j0);
    });
    return size;
}

bool is_walk(const ProductGraph& p, std::span<const Vertex> walk) {
    if (walk.empty()) {
        return false;
    }
    for (auto x : walk) {
        if (x >= p.vertex_count()) {
            return false;
        }
    }
    for (std::size_t i = 1; i < walk.size(); ++i) {
        if (!p.has_edge(walk[i - 1], walk[i])) {
            return false;
        }
    }
    return true;
}

Walk project(const ProductGraph& p, std::span<const Vertex> walk, Side side) {
    if (!is_walk(p, walk)) {
        throw Error("not a walk of the product graph");
    }
    Walk result;
    result.reserve(walk.size());
    for (auto x : walk) {
        result.push_back(side == Side::left ? p.vertex(x).left : p.vertex(x).right);
    }
    return result;
}

Walk lift(const ProductGraph& p, std::span<const Vertex> walk1, std::span<const Vertex> walk2) {
    if (walk1.size() != walk2.size()) {
        throw Error("walks to lift have different lengths");
    }
    if (walk1.empty()) {
        throw Error("walks to lift are empty");
    }
    Walk result;
    result.reserve(walk1.size());
    for (std::size_t i = 0; i < walk1.size(); ++i) {
        auto x = p.index_of(walk1[i], walk2[i]);
        if (!x) {
            throw Error("walks to lift spell different strings (position " + std::to_string(i) +
                        ")");
        }
        result.push_back(*x);
    }
    if (!is_walk(p, result)) {
        throw Error("lifted sequence is not a walk; the inputs are not walks of the factors");
    }
    return result;
}

LabelString spell(const ProductGraph& p, std::span<const Vertex> walk) {
    if (!is_walk(p, walk)) {
        throw Error("not a walk of the product graph");
    }
    LabelString s;
    s.reserve(walk.size());
    for (auto x : walk) {
        s.push_back(p.label(x));
    }
    return s;
}

VertexMask off_diagonal(const ProductGraph& p) {
    VertexMask diff(p.vertex_count(), false);
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        diff[x] = p.vertex(x).left != p.vertex(x).right;
    }
    return diff;
}

}  // namespace lgp
