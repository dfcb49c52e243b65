#include "lgp/oracle.hpp"

#include <algorithm>
#include <tuple>

namespace lgp::oracle {

namespace {

std::vector<Vertex> successors(const LabeledGraph& g, Vertex v) {
    std::vector<Vertex> result;
    for (const auto& [x, y] : g.edges()) {
        if (x == v) {
            result.push_back(y);
        }
        if (!g.directed() && y == v) {
            result.push_back(x);
        }
    }
    return result;
}

std::vector<std::vector<Vertex>> adjacency(const LabeledGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        adj[v] = successors(g, v);
    }
    return adj;
}

using PairSet = std::set<std::pair<Vertex, Vertex>>;

// one step of a pair of synchronized walks
PairSet advance(const PairSet& layer, const LabeledGraph& g1, const LabeledGraph& g2,
                const std::vector<std::vector<Vertex>>& adj1,
                const std::vector<std::vector<Vertex>>& adj2) {
    PairSet next;
    for (const auto& [x, y] : layer) {
        for (auto x2 : adj1[x]) {
            for (auto y2 : adj2[y]) {
                if (g1.label(x2) == g2.label(y2)) {
                    next.emplace(x2, y2);
                }
            }
        }
    }
    return next;
}

std::size_t longest_from(PairSet layer, const LabeledGraph& g1, const LabeledGraph& g2,
                         std::size_t bound) {
    const auto adj1 = adjacency(g1);
    const auto adj2 = adjacency(g2);
    std::size_t length = 0;
    while (!layer.empty() && length < bound) {
        ++length;
        layer = advance(layer, g1, g2, adj1, adj2);
    }
    return length;
}

}  // namespace

OccurrenceIndex enumerate(const LabeledGraph& g, std::size_t bound, std::size_t guard) {
    if (bound == 0) {
        throw Error("enumeration bound must be at least 1");
    }
    const auto adj = adjacency(g);
    OccurrenceIndex index;
    index.bound = bound;
    std::size_t expanded = 0;
    std::vector<Walk> stack;
    for (Vertex v = g.vertex_count(); v-- > 0;) {
        stack.push_back(Walk{v});
    }
    while (!stack.empty()) {
        Walk walk = std::move(stack.back());
        stack.pop_back();
        if (++expanded > guard) {
            throw Error("walk enumeration guard exceeded");
        }
        LabelString s;
        for (auto v : walk) {
            s.push_back(g.label(v));
        }
        index.occurrences[s].insert(walk);
        if (walk.size() < bound) {
            for (auto w : adj[walk.back()]) {
                Walk longer = walk;
                longer.push_back(w);
                stack.push_back(std::move(longer));
            }
        }
    }
    return index;
}

std::size_t count_occurrences(const LabeledGraph& g, std::span<const Label> s, std::size_t cap) {
    if (s.empty()) {
        return 0;
    }
    const auto adj = adjacency(g);
    const auto n = g.vertex_count();
    std::vector<std::size_t> ending(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        ending[v] = g.label(v) == s[0] ? 1 : 0;
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<std::size_t> next(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (ending[v] == 0) {
                continue;
            }
            for (auto w : adj[v]) {
                if (g.label(w) == s[i]) {
                    next[w] = std::min(cap, next[w] + ending[v]);
                }
            }
        }
        ending = std::move(next);
    }
    std::size_t total = 0;
    for (auto c : ending) {
        total = std::min(cap, total + c);
    }
    return total;
}

std::size_t matching_pairs(const LabeledGraph& g1, const LabeledGraph& g2) {
    std::size_t count = 0;
    for (Vertex x = 0; x < g1.vertex_count(); ++x) {
        for (Vertex y = 0; y < g2.vertex_count(); ++y) {
            count += g1.label(x) == g2.label(y);
        }
    }
    return count;
}

Classification brute_lrsp_classify(const LabeledGraph& g) {
    // states of two synchronized walks spelling the same string, with a flag
    // recording whether they have differed at some index so far
    using State = std::tuple<Vertex, Vertex, bool>;
    const auto adj = adjacency(g);
    const std::size_t limit = matching_pairs(g, g) + 1;
    std::set<State> layer;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            if (g.label(x) == g.label(y)) {
                layer.emplace(x, y, x != y);
            }
        }
    }
    auto has_distinct = [](const std::set<State>& s) {
        return std::any_of(s.begin(), s.end(), [](const State& st) { return std::get<2>(st); });
    };
    Classification result;
    for (std::size_t length = 1; !layer.empty(); ++length) {
        if (has_distinct(layer)) {
            if (length == limit) {
                result.finite = false;
                return result;
            }
            result.length = length;
        }
        if (length == limit) {
            // no repeat of this length, so none longer either
            break;
        }
        std::set<State> next;
        for (const auto& [x, y, differed] : layer) {
            for (auto x2 : adj[x]) {
                for (auto y2 : adj[y]) {
                    if (g.label(x2) == g.label(y2)) {
                        next.emplace(x2, y2, differed || x2 != y2);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    return result;
}

bool brute_infinite_check(const LabeledGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            if (g.label(x) == g.label(y)) {
                pairs.emplace_back(x, y);
            }
        }
    }
    const auto m = pairs.size();
    // reach[i][j]: a walk of at least one edge from pair i to pair j
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    auto edge = [&](Vertex a, Vertex b) {
        for (const auto& [x, y] : g.edges()) {
            if ((x == a && y == b) || (!g.directed() && x == b && y == a)) {
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            reach[i][j] = edge(pairs[i].first, pairs[j].first) && edge(pairs[i].second, pairs[j].second);
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!reach[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (pairs[i].first == pairs[i].second) {
            continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (reach[j][j] && (i == j || reach[i][j])) {
                return true;
            }
        }
    }
    return false;
}

std::size_t brute_lcsp(const LabeledGraph& g1, const LabeledGraph& g2, std::size_t bound) {
    PairSet start;
    for (Vertex x = 0; x < g1.vertex_count(); ++x) {
        for (Vertex y = 0; y < g2.vertex_count(); ++y) {
            if (g1.label(x) == g2.label(y)) {
                start.emplace(x, y);
            }
        }
    }
    return longest_from(std::move(start), g1, g2, bound);
}

std::vector<std::size_t> brute_msp(const LabeledGraph& g1, const LabeledGraph& g2, std::size_t bound) {
    std::vector<std::size_t> ms(g1.vertex_count(), 0);
    for (Vertex x = 0; x < g1.vertex_count(); ++x) {
        PairSet start;
        for (Vertex y = 0; y < g2.vertex_count(); ++y) {
            if (g1.label(x) == g2.label(y)) {
                start.emplace(x, y);
            }
        }
        ms[x] = longest_from(std::move(start), g1, g2, bound);
    }
    return ms;
}

std::size_t brute_msp_star(const LabeledGraph& g1, const LabeledGraph& g2, Vertex v1, Vertex v2,
                           std::size_t bound) {
    if (g1.label(v1) != g2.label(v2)) {
        return 0;
    }
    return longest_from(PairSet{{v1, v2}}, g1, g2, bound);
}

bool brute_smlg(const LabeledGraph& g, std::span<const Label> pattern) {
    if (pattern.empty()) {
        return true;
    }
    const auto adj = adjacency(g);
    std::set<Vertex> layer;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.label(v) == pattern[0]) {
            layer.insert(v);
        }
    }
    for (std::size_t i = 1; i < pattern.size() && !layer.empty(); ++i) {
        std::set<Vertex> next;
        for (auto v : layer) {
            for (auto w : adj[v]) {
                if (g.label(w) == pattern[i]) {
                    next.insert(w);
                }
            }
        }
        layer = std::move(next);
    }
    return !layer.empty();
}

NaiveProduct naive_product(const LabeledGraph& g1, const LabeledGraph& g2) {
    NaiveProduct p;
    for (Vertex x = 0; x < g1.vertex_count(); ++x) {
        for (Vertex y = 0; y < g2.vertex_count(); ++y) {
            if (g1.label(x) == g2.label(y)) {
                p.vertices.emplace_back(x, y);
            }
        }
    }
    for (const auto& [x1, y1] : p.vertices) {
        for (const auto& [x2, y2] : p.vertices) {
            const bool left = std::find(g1.edges().begin(), g1.edges().end(), Edge{x1, x2}) != g1.edges().end();
            const bool right = std::find(g2.edges().begin(), g2.edges().end(), Edge{y1, y2}) != g2.edges().end();
            if (left && right) {
                p.edges.insert({{x1, y1}, {x2, y2}});
            }
        }
    }
    return p;
}

std::size_t brute_lrsp_paths_undirected(const LabeledGraph& g) {
    const auto adj = adjacency(g);
    std::map<LabelString, std::set<Walk>> occurrences;
    std::vector<Walk> stack;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        stack.push_back(Walk{v});
    }
    while (!stack.empty()) {
        Walk path = std::move(stack.back());
        stack.pop_back();
        LabelString s;
        for (auto v : path) {
            s.push_back(g.label(v));
        }
        occurrences[s].insert(path);
        for (auto w : adj[path.back()]) {
            if (std::find(path.begin(), path.end(), w) == path.end()) {
                Walk longer = path;
                longer.push_back(w);
                stack.push_back(std::move(longer));
            }
        }
    }
    std::size_t best = 0;
    for (const auto& [s, paths] : occurrences) {
        if (paths.size() >= 2) {
            best = std::max(best, s.size());
        }
    }
    return best;
}

}  // namespace lgp::oracle
