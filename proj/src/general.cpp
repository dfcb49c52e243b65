#include "lgp/general.hpp"

#include <algorithm>
#include <deque>

namespace lgp {

namespace {

// (w, w'): the first pair of distinct out-neighbors of v sharing a label
std::optional<Edge> duplicate_label_pair(const LabeledGraph& g, Vertex v) {
    const auto out = g.out(v);
    for (std::size_t j = 0; j < out.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (g.label(out[i]) == g.label(out[j])) {
                return Edge{out[i], out[j]};
            }
        }
    }
    return std::nullopt;
}

void append_labels(const ProductGraph& p, std::span<const Vertex> walk, LabelString& out) {
    for (auto x : walk) {
        out.push_back(p.label(x));
    }
}

}  // namespace

VertexClasses classes(const ProductGraph& p, const LabeledGraph& g) {
    if (!p.is_self_product() || p.left_count() != g.vertex_count() ||
        p.right_count() != g.vertex_count()) {
        throw Error("vertex classes need the self-product of the given graph");
    }
    VertexClasses c;
    c.cyc = strongly_connected_components(p).cyclic;
    c.diff = off_diagonal(p);
    c.ndet.assign(p.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (duplicate_label_pair(g, v)) {
            c.ndet[*p.index_of(v, v)] = true;
        }
    }
    return c;
}

std::optional<Walk> reach_between(const ProductGraph& p, const VertexMask& from,
                                  const VertexMask& to) {
    const auto n = static_cast<Vertex>(p.vertex_count());
    for (Vertex x = 0; x < n; ++x) {
        if (from[x] && to[x]) {
            return Walk{x};
        }
    }
    std::vector<Vertex> parent(n, no_vertex);
    VertexMask visited(n, false);
    std::deque<Vertex> queue;
    for (Vertex x = 0; x < n; ++x) {
        if (from[x]) {
            visited[x] = true;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (auto w : p.out(v)) {
            if (visited[w]) {
                continue;
            }
            visited[w] = true;
            parent[w] = v;
            if (to[w]) {
                Walk path{w};
                while (parent[path.back()] != no_vertex) {
                    path.push_back(parent[path.back()]);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

std::optional<Walk> cycle_through(const ProductGraph& p, Vertex x) {
    if (p.has_edge(x, x)) {
        return Walk{x};
    }
    const auto n = p.vertex_count();
    std::vector<Vertex> parent(n, no_vertex);
    VertexMask visited(n, false);
    std::deque<Vertex> queue{x};
    visited[x] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (auto w : p.out(v)) {
            if (w == x) {
                Walk cycle{v};
                while (cycle.back() != x) {
                    cycle.push_back(parent[cycle.back()]);
                }
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (!visited[w]) {
                visited[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

VertexMask reaching(const ProductGraph& p, const VertexMask& targets) {
    VertexMask result = targets;
    std::deque<Vertex> queue;
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (targets[x]) {
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (auto w : p.in(v)) {
            if (!result[w]) {
                result[w] = true;
                queue.push_back(w);
            }
        }
    }
    return result;
}

CommonAnswer lcsp_general(const LabeledGraph& g1, const LabeledGraph& g2) {
    const auto p = build_product(g1, g2);
    const auto scc = strongly_connected_components(p);
    CommonAnswer answer;
    const auto first_cyclic = std::find(scc.cyclic.begin(), scc.cyclic.end(), true);
    if (first_cyclic == scc.cyclic.end()) {
        answer.finite = lcsp_dag(p);
        return answer;
    }
    const auto x = static_cast<Vertex>(first_cyclic - scc.cyclic.begin());
    const auto cycle = *cycle_through(p, x);
    answer.infinite = true;
    append_labels(p, cycle, answer.period);
    for (auto y : cycle) {
        answer.cycle1.push_back(p.vertex(y).left);
        answer.cycle2.push_back(p.vertex(y).right);
    }
    return answer;
}

std::vector<std::size_t> msp_general(const LabeledGraph& g1, const LabeledGraph& g2) {
    const auto p = build_product(g1, g2);
    // a product vertex reaching a cycle starts an infinite common walk
    const auto unbounded = reaching(p, strongly_connected_components(p).cyclic);
    auto ms = msp_dag(p, unbounded);
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (unbounded[x]) {
            ms[p.vertex(x).left] = infinite_length;
        }
    }
    return ms;
}

std::size_t msp_star(const LabeledGraph& g1, const LabeledGraph& g2, Vertex v1, Vertex v2) {
    if (v1 >= g1.vertex_count() || v2 >= g2.vertex_count()) {
        throw Error("start vertex out of range");
    }
    if (g1.label(v1) != g2.label(v2)) {
        return 0;
    }
    const auto p = build_product(g1, g2);
    const Vertex start = *p.index_of(v1, v2);
    const auto unbounded = reaching(p, strongly_connected_components(p).cyclic);
    if (unbounded[start]) {
        return infinite_length;
    }
    return longest_paths(p, unbounded).from[start] + 1;
}

RepeatAnswer lrsp_general(const LabeledGraph& g) {
    if (!g.directed()) {
        throw Error("lrsp_general expects a directed graph");
    }
    const auto p = self_product(g);
    const auto c = classes(p, g);
    RepeatAnswer answer;

    auto set_lasso = [&](const Walk& walk) {
        for (auto x : walk) {
            answer.lasso1.push_back(p.vertex(x).left);
            answer.lasso2.push_back(p.vertex(x).right);
        }
    };

    // an off-diagonal pair reaching a product cycle: r s^omega
    if (auto path = reach_between(p, c.diff, c.cyc)) {
        const auto cycle = *cycle_through(p, path->back());
        answer.kind = RepeatKind::infinite;
        append_labels(p, std::span(*path).first(path->size() - 1), answer.r);
        append_labels(p, cycle, answer.s);
        Walk lasso(path->begin(), path->end() - 1);
        lasso.insert(lasso.end(), cycle.begin(), cycle.end());
        set_lasso(lasso);
        return answer;
    }

    // a diagonal cycle reaching a non-deterministic diagonal vertex: r^m s
    // start from the smallest-index diagonal cycle vertex that gets there
    const auto to_ndet = reaching(p, c.ndet);
    VertexMask start(p.vertex_count(), false);
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
        if (c.cyc[x] && !c.diff[x] && to_ndet[x]) {
            start[x] = true;
            break;
        }
    }
    if (auto path = reach_between(p, start, c.ndet)) {
        const auto cycle = *cycle_through(p, path->front());
        const Vertex v = p.vertex(path->back()).left;
        const auto [w1, w2] = *duplicate_label_pair(g, v);
        const Vertex split = *p.index_of(w1, w2);
        answer.kind = RepeatKind::unbounded;
        append_labels(p, cycle, answer.r);
        append_labels(p, *path, answer.s);
        answer.s.push_back(p.label(split));
        Walk lasso = cycle;
        lasso.insert(lasso.end(), path->begin(), path->end());
        lasso.push_back(split);
        set_lasso(lasso);
        return answer;
    }

    // otherwise no off-diagonal vertex touches a cycle and the rest is a DAG
    answer.finite = lrsp_dag(p, c.diff, c.cyc);
    return answer;
}

LabelString expand_answer(const RepeatAnswer& answer, std::size_t m) {
    if (answer.kind == RepeatKind::finite) {
        throw Error("finite answers have no family to expand");
    }
    if (m == 0) {
        throw Error("expansion count must be at least 1");
    }
    LabelString result;
    if (answer.kind == RepeatKind::unbounded) {
        for (std::size_t i = 0; i < m; ++i) {
            result.insert(result.end(), answer.r.begin(), answer.r.end());
        }
        result.insert(result.end(), answer.s.begin(), answer.s.end());
    } else {
        result = answer.r;
        for (std::size_t i = 0; i < m; ++i) {
            result.insert(result.end(), answer.s.begin(), answer.s.end());
        }
    }
    return result;
}

}  // namespace lgp
