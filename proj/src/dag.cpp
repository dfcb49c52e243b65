#include "lgp/dag.hpp"

#include <algorithm>

namespace lgp {

Walk forward_path(const LongestPathTable& t, Vertex v) {
    Walk path{v};
    while (t.next[path.back()] != no_vertex) {
        path.push_back(t.next[path.back()]);
    }
    return path;
}

Walk backward_path(const LongestPathTable& t, Vertex v) {
    Walk path{v};
    while (t.prev[path.back()] != no_vertex) {
        path.push_back(t.prev[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

WitnessPair witness_from_product_path(const ProductGraph& p, const Walk& path) {
    WitnessPair w;
    w.length = path.size();
    w.first.reserve(path.size());
    w.second.reserve(path.size());
    for (auto x : path) {
        w.string.push_back(p.label(x));
        w.first.push_back(p.vertex(x).left);
        w.second.push_back(p.vertex(x).right);
    }
    return w;
}

}  // namespace

std::optional<Occurrence> smlg(const LabeledGraph& g, std::span<const Label> pattern) {
    if (pattern.empty()) {
        throw Error("pattern must be non-empty");
    }
    const auto pattern_graph = labeled_path(pattern);
    const auto p = build_product(g, pattern_graph);
    // the pattern side is a path, so the product is acyclic
    const auto table = longest_paths(p);
    const std::size_t needed = pattern.size() - 1;
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (p.vertex(x).right == 0 && table.from[x] == needed) {
            auto path = forward_path(table, x);
            Occurrence occ;
            occ.walk = project(p, path, Side::left);
            occ.string.assign(pattern.begin(), pattern.end());
            return occ;
        }
    }
    return std::nullopt;
}

WitnessPair lcsp_dag(const ProductGraph& p, const VertexMask& removed) {
    const auto table = longest_paths(p, removed);
    Vertex best = no_vertex;
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (detail::alive(removed, x) && (best == no_vertex || table.from[x] > table.from[best])) {
            best = x;
        }
    }
    if (best == no_vertex) {
        return {};
    }
    return witness_from_product_path(p, forward_path(table, best));
}

std::vector<std::size_t> msp_dag(const ProductGraph& p, const VertexMask& removed) {
    const auto table = longest_paths(p, removed);
    std::vector<std::size_t> ms(p.left_count(), 0);
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (detail::alive(removed, x)) {
            auto& value = ms[p.vertex(x).left];
            value = std::max(value, table.from[x] + 1);
        }
    }
    return ms;
}

WitnessPair lrsp_dag(const ProductGraph& p, const VertexMask& diff, const VertexMask& removed) {
    const auto table = longest_paths(p, removed);
    Vertex best = no_vertex;
    std::size_t best_length = 0;
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (!diff[x] || !detail::alive(removed, x)) {
            continue;
        }
        const auto length = table.from[x] + table.to[x] + 1;
        if (length > best_length) {
            best = x;
            best_length = length;
        }
    }
    if (best == no_vertex) {
        return {};
    }
    auto path = backward_path(table, best);
    auto tail = forward_path(table, best);
    path.insert(path.end(), tail.begin() + 1, tail.end());
    return witness_from_product_path(p, path);
}

}  // namespace lgp
