#include "lgp/undirected.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace lgp {

namespace {

void require_undirected(const LabeledGraph& g) {
    if (g.directed()) {
        throw Error("expected an undirected graph");
    }
}

WitnessPair shared_label_witness(const LabeledGraph& g) {
    std::vector<Vertex> first_with(g.alphabet_size(), no_vertex);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& seen = first_with[g.label(v)];
        if (seen != no_vertex) {
            return {1, {g.label(v)}, {seen}, {v}};
        }
        seen = v;
    }
    return {};
}

bool connected(const LabeledGraph& g) {
    const auto n = g.vertex_count();
    if (n == 0) {
        return true;
    }
    VertexMask seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (auto w : g.out(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace

RepeatAnswer lrsp_undirected_walks(const LabeledGraph& g) {
    require_undirected(g);
    // every undirected edge read in both directions
    std::vector<std::tuple<Label, Label, Vertex, Vertex>> oriented;
    oriented.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        oriented.emplace_back(g.label(u), g.label(v), u, v);
        oriented.emplace_back(g.label(v), g.label(u), v, u);
    }
    std::sort(oriented.begin(), oriented.end());
    RepeatAnswer answer;
    for (std::size_t i = 1; i < oriented.size(); ++i) {
        const auto& [a1, b1, x1, y1] = oriented[i - 1];
        const auto& [a2, b2, x2, y2] = oriented[i];
        if (a1 == a2 && b1 == b2) {
            answer.kind = RepeatKind::infinite;
            answer.s = {a1, b1};
            answer.lasso1 = {x1, y1};
            answer.lasso2 = {x2, y2};
            return answer;
        }
    }
    answer.finite = shared_label_witness(g);
    return answer;
}

bool is_tree(const LabeledGraph& g) {
    return !g.directed() && g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() &&
           connected(g);
}

bool is_path_graph(const LabeledGraph& g) {
    if (!is_tree(g)) {
        return false;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out(v).size() > 2) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> suffix_array(std::span<const Label> text) {
    const std::size_t n = text.size();
    std::vector<std::size_t> sa(n);
    if (n == 0) {
        return sa;
    }
    std::size_t classes = 0;
    for (auto c : text) {
        classes = std::max<std::size_t>(classes, c + 1);
    }
    std::vector<std::size_t> rank(text.begin(), text.end());
    std::vector<std::size_t> tmp(n);
    std::vector<std::size_t> count;

    auto counting_sort = [&](const std::vector<std::size_t>& input, auto key) {
        count.assign(classes + 1, 0);
        for (auto i : input) {
            ++count[key(i) + 1];
        }
        for (std::size_t c = 0; c < classes; ++c) {
            count[c + 1] += count[c];
        }
        std::vector<std::size_t> output(input.size());
        for (auto i : input) {
            output[count[key(i)]++] = i;
        }
        return output;
    };

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = i;
    }
    sa = counting_sort(all, [&](std::size_t i) { return rank[i]; });
    // compact ranks
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        tmp[sa[i]] = tmp[sa[i - 1]] + (rank[sa[i]] != rank[sa[i - 1]]);
    }
    rank.swap(tmp);
    classes = rank[sa[n - 1]] + 1;

    for (std::size_t k = 1; classes < n; k <<= 1) {
        // order by second key: suffixes running off the end first, then by sa
        std::vector<std::size_t> by_second;
        by_second.reserve(n);
        for (std::size_t i = n - k < n ? n - k : 0; i < n; ++i) {
            by_second.push_back(i);
        }
        for (auto i : sa) {
            if (i >= k) {
                by_second.push_back(i - k);
            }
        }
        sa = counting_sort(by_second, [&](std::size_t i) { return rank[i]; });
        auto second = [&](std::size_t i) -> std::size_t { return i + k < n ? rank[i + k] + 1 : 0; };
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const bool same = rank[sa[i]] == rank[sa[i - 1]] && second(sa[i]) == second(sa[i - 1]);
            tmp[sa[i]] = tmp[sa[i - 1]] + !same;
        }
        rank.swap(tmp);
        classes = rank[sa[n - 1]] + 1;
    }
    return sa;
}

std::vector<std::size_t> lcp_array(std::span<const Label> text, std::span<const std::size_t> sa) {
    const std::size_t n = text.size();
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[sa[i]] = i;
    }
    std::vector<std::size_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) {
            ++h;
        }
        lcp[rank[i]] = h;
        if (h > 0) {
            --h;
        }
    }
    return lcp;
}

WitnessPair lrsp_undirected_path_paths(const LabeledGraph& g) {
    require_undirected(g);
    if (g.vertex_count() == 0) {
        return {};
    }
    if (!is_path_graph(g)) {
        throw Error("input is not an undirected path graph");
    }
    const std::size_t n = g.vertex_count();

    // vertex order from the lower-indexed endpoint
    Vertex start = 0;
    while (g.out(start).size() > 1) {
        ++start;
    }
    Walk order{start};
    Vertex previous = no_vertex;
    while (order.size() < n) {
        for (auto w : g.out(order.back())) {
            if (w != previous) {
                previous = order.back();
                order.push_back(w);
                break;
            }
        }
    }

    LabelString text;
    text.reserve(2 * n + 1);
    for (auto v : order) {
        text.push_back(g.label(v));
    }
    text.push_back(g.alphabet_size());
    for (std::size_t i = n; i-- > 0;) {
        text.push_back(g.label(order[i]));
    }

    const auto sa = suffix_array(text);
    const auto lcp = lcp_array(text, sa);
    std::size_t best = 0;
    for (std::size_t i = 1; i < lcp.size(); ++i) {
        if (lcp[i] > lcp[best]) {
            best = i;
        }
    }
    // a single vertex and its mirror are the same walk, so only length >= 2
    if (lcp[best] < 2) {
        return shared_label_witness(g);
    }
    const std::size_t length = lcp[best];
    auto to_path = [&](std::size_t pos) {
        Walk path;
        for (std::size_t t = 0; t < length; ++t) {
            path.push_back(pos < n ? order[pos + t] : order[n - 1 - (pos - n - 1) - t]);
        }
        return path;
    };
    const auto a = std::min(sa[best - 1], sa[best]);
    const auto b = std::max(sa[best - 1], sa[best]);
    WitnessPair w;
    w.length = length;
    w.string.assign(text.begin() + static_cast<std::ptrdiff_t>(a),
                    text.begin() + static_cast<std::ptrdiff_t>(a + length));
    w.first = to_path(a);
    w.second = to_path(b);
    return w;
}

TreeReduction tree_reduction(const LabeledGraph& t) {
    if (!is_tree(t)) {
        throw Error("input is not an undirected tree");
    }
    const std::size_t n = t.vertex_count();
    const Label separator = t.alphabet_size();
    std::vector<Label> labels(n, separator);
    labels.reserve(n * n + n);
    std::vector<Edge> edges;
    edges.reserve(n * n + n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        edges.emplace_back(static_cast<Vertex>(j), static_cast<Vertex>(j + 1));
    }
    for (std::size_t root = 0; root < n; ++root) {
        const auto offset = static_cast<Vertex>(n + root * n);
        for (Vertex v = 0; v < n; ++v) {
            labels.push_back(t.label(v));
        }
        edges.emplace_back(static_cast<Vertex>(n - 1), offset + static_cast<Vertex>(root));
        // orient every edge away from the root
        VertexMask seen(n, false);
        std::deque<Vertex> queue{static_cast<Vertex>(root)};
        seen[root] = true;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (auto w : t.out(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    edges.emplace_back(offset + v, offset + w);
                    queue.push_back(w);
                }
            }
        }
    }
    return {LabeledGraph(true, separator + 1, std::move(labels), std::move(edges)), separator, n};
}

WitnessPair lrsp_undirected_tree_paths(const LabeledGraph& t) {
    const auto reduction = tree_reduction(t);
    const std::size_t n = reduction.tree_size;
    const auto answer = lrsp_general(reduction.graph);
    if (answer.kind != RepeatKind::finite) {
        throw Error("internal: the tree reduction produced a cyclic graph");
    }
    const auto& found = answer.finite;
    if (found.length <= n) {
        return {};
    }
    // both occurrences run through the whole separator path first
    for (std::size_t j = 0; j < n; ++j) {
        if (found.first[j] != j || found.second[j] != j) {
            throw Error("internal: longest repeat of the tree reduction skips the separator path");
        }
    }
    WitnessPair w;
    w.length = found.length - n;
    w.string.assign(found.string.begin() + static_cast<std::ptrdiff_t>(n), found.string.end());
    for (std::size_t i = n; i < found.length; ++i) {
        w.first.push_back(static_cast<Vertex>((found.first[i] - n) % n));
        w.second.push_back(static_cast<Vertex>((found.second[i] - n) % n));
    }
    return w;
}

}  // namespace lgp
