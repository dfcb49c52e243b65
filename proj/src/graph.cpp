#include "lgp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace lgp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool reverse,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
    offsets.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++offsets[(reverse ? v : u) + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets[i + 1] += offsets[i];
    }
    targets.assign(edges.size(), 0);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        targets[cursor[reverse ? v : u]++] = reverse ? u : v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(targets.begin() + offsets[i], targets.begin() + offsets[i + 1]);
    }
}

}  // namespace

LabeledGraph::LabeledGraph(bool directed, Label alphabet_size, std::vector<Label> labels,
                           std::vector<Edge> edges)
    : directed_(directed),
      alphabet_size_(alphabet_size),
      labels_(std::move(labels)),
      edges_(std::move(edges)) {
    const std::size_t n = labels_.size();
    if (n >= no_vertex) {
        throw Error("too many vertices");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (labels_[v] >= alphabet_size_) {
            throw Error("label " + std::to_string(labels_[v]) + " of vertex " + std::to_string(v) +
                        " is outside the alphabet of size " + std::to_string(alphabet_size_));
        }
    }
    std::vector<Edge> keys;
    keys.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        if (u >= n || v >= n) {
            throw Error("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
        }
        if (!directed_ && u == v) {
            throw Error("self-loop in undirected graph at vertex " + std::to_string(u));
        }
        keys.push_back(directed_ ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)});
    }
    std::sort(keys.begin(), keys.end());
    if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
        throw Error("duplicate edge: " + std::to_string(dup->first) + " " +
                    std::to_string(dup->second));
    }

    if (directed_) {
        build_csr(n, edges_, false, out_offsets_, out_targets_);
        build_csr(n, edges_, true, in_offsets_, in_sources_);
    } else {
        std::vector<Edge> both;
        both.reserve(2 * edges_.size());
        for (const auto& [u, v] : edges_) {
            both.emplace_back(u, v);
            both.emplace_back(v, u);
        }
        build_csr(n, both, false, out_offsets_, out_targets_);
        in_offsets_ = out_offsets_;
        in_sources_ = out_targets_;
    }
}

std::span<const Vertex> LabeledGraph::out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> LabeledGraph::in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool LabeledGraph::has_edge(Vertex from, Vertex to) const {
    if (from >= vertex_count() || to >= vertex_count()) {
        return false;
    }
    auto adj = out(from);
    return std::binary_search(adj.begin(), adj.end(), to);
}

namespace {

// Reads significant lines, tracking 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            return true;
        }
        return false;
    }

    std::size_t number() const { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

std::uint64_t to_integer(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

Vertex to_index(std::string_view token, std::size_t line) {
    auto value = to_integer(token, line);
    if (value >= no_vertex) {
        throw ParseError(line, "value too large: " + std::string(token));
    }
    return static_cast<Vertex>(value);
}

Label to_label(std::string_view token, std::size_t line, const ParseOptions& options) {
    if (options.letter_labels && token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') {
        return static_cast<Label>(token[0] - 'a');
    }
    return to_index(token, line);
}

}  // namespace

LabeledGraph parse_graph(std::istream& in, const ParseOptions& options) {
    LineReader reader(in);
    std::string line;

    if (!reader.next(line)) {
        throw ParseError(reader.number(), "missing header line");
    }
    auto header = split(line);
    bool directed = false;
    if (header.size() == 1 && header[0] == "directed") {
        directed = true;
    } else if (header.size() == 1 && header[0] == "undirected") {
        directed = false;
    } else {
        throw ParseError(reader.number(), "header must be 'directed' or 'undirected'");
    }

    if (!reader.next(line)) {
        throw ParseError(reader.number(), "missing size line");
    }
    auto sizes = split(line);
    if (sizes.size() != 2 && sizes.size() != 3) {
        throw ParseError(reader.number(), "size line must be '<n> <m> [<sigma>]'");
    }
    const std::size_t size_line = reader.number();
    const Vertex n = to_index(sizes[0], size_line);
    const auto m = to_integer(sizes[1], size_line);
    std::optional<Label> sigma;
    if (sizes.size() == 3) {
        sigma = to_index(sizes[2], size_line);
    }

    std::vector<Label> labels;
    if (n > 0) {
        if (!reader.next(line)) {
            throw ParseError(reader.number(), "missing labels line");
        }
        auto tokens = split(line);
        if (tokens.size() != n) {
            throw ParseError(reader.number(), "expected " + std::to_string(n) + " labels, got " +
                                                  std::to_string(tokens.size()));
        }
        labels.reserve(n);
        for (auto t : tokens) {
            labels.push_back(to_label(t, reader.number(), options));
        }
    }
    if (!sigma) {
        Label max_label = 0;
        for (auto l : labels) {
            max_label = std::max(max_label, l);
        }
        sigma = labels.empty() ? 0 : max_label + 1;
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    std::set<Edge> seen;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw ParseError(reader.number(), "expected " + std::to_string(m) + " edge lines, got " +
                                                  std::to_string(i));
        }
        auto tokens = split(line);
        if (tokens.size() != 2) {
            throw ParseError(reader.number(), "edge line must be '<u> <v>'");
        }
        Vertex u = to_index(tokens[0], reader.number());
        Vertex v = to_index(tokens[1], reader.number());
        if (u >= n || v >= n) {
            throw ParseError(reader.number(), "endpoint out of range: " + std::to_string(u) + " " +
                                                  std::to_string(v));
        }
        if (!directed && u == v) {
            throw ParseError(reader.number(), "self-loop in undirected graph");
        }
        if (!seen.insert(directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)}).second) {
            throw ParseError(reader.number(), "duplicate edge");
        }
        edges.emplace_back(u, v);
    }
    if (reader.next(line)) {
        throw ParseError(reader.number(), "unexpected trailing content");
    }

    try {
        return LabeledGraph(directed, *sigma, std::move(labels), std::move(edges));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

LabeledGraph parse_graph(const std::string& text, const ParseOptions& options) {
    std::istringstream in(text);
    return parse_graph(in, options);
}

std::string serialize(const LabeledGraph& g) {
    std::ostringstream out;
    out << (g.directed() ? "directed" : "undirected") << '\n';
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.alphabet_size() << '\n';
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << (v ? " " : "") << g.label(static_cast<Vertex>(v));
    }
    out << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

LabelString parse_pattern(std::istream& in, const ParseOptions& options) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) {
        throw ParseError(reader.number(), "missing pattern line");
    }
    LabelString pattern;
    for (auto t : split(line)) {
        const bool word = options.letter_labels &&
                          std::all_of(t.begin(), t.end(), [](char c) { return c >= 'a' && c <= 'z'; });
        if (word) {
            for (char c : t) {
                pattern.push_back(static_cast<Label>(c - 'a'));
            }
        } else {
            pattern.push_back(to_index(t, reader.number()));
        }
    }
    std::string extra;
    if (reader.next(extra)) {
        throw ParseError(reader.number(), "pattern must be a single line");
    }
    return pattern;
}

LabelString parse_pattern(const std::string& text, const ParseOptions& options) {
    std::istringstream in(text);
    return parse_pattern(in, options);
}

bool is_walk(const LabeledGraph& g, std::span<const Vertex> walk) {
    if (walk.empty()) {
        return false;
    }
    for (auto v : walk) {
        if (v >= g.vertex_count()) {
            return false;
        }
    }
    for (std::size_t i = 1; i < walk.size(); ++i) {
        if (!g.has_edge(walk[i - 1], walk[i])) {
            return false;
        }
    }
    return true;
}

LabelString spell(const LabeledGraph& g, std::span<const Vertex> walk) {
    if (!is_walk(g, walk)) {
        throw Error("not a walk of the graph");
    }
    LabelString s;
    s.reserve(walk.size());
    for (auto v : walk) {
        s.push_back(g.label(v));
    }
    return s;
}

NormalizationReport normalize(const LabeledGraph& g) {
    NormalizationReport report;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out(v).empty() && g.in(v).empty()) {
            report.isolated_vertices.push_back(v);
        }
        auto& count = report.label_histogram[g.label(v)];
        if (++count >= 2) {
            report.has_shared_label = true;
        }
    }
    return report;
}

Determinism is_deterministic(const LabeledGraph& g) {
    if (!g.directed()) {
        throw Error("determinism is defined for directed graphs only");
    }
    std::vector<Vertex> seen_by(g.alphabet_size(), no_vertex);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (auto w : g.out(v)) {
            auto& slot = seen_by[g.label(w)];
            if (slot == v) {
                return {false, v};
            }
            slot = v;
        }
    }
    return {};
}

LabeledGraph symmetrize(const LabeledGraph& g) {
    if (g.directed()) {
        throw Error("symmetrize expects an undirected graph");
    }
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
    }
    return LabeledGraph(true, g.alphabet_size(), {g.labels().begin(), g.labels().end()},
                        std::move(edges));
}

namespace {

Label alphabet_for(std::span<const Label> labels, Label requested) {
    Label sigma = requested;
    for (auto l : labels) {
        sigma = std::max(sigma, l + 1);
    }
    return sigma;
}

}  // namespace

LabeledGraph labeled_path(std::span<const Label> labels, Label alphabet_size) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < labels.size(); ++i) {
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    }
    return LabeledGraph(true, alphabet_for(labels, alphabet_size),
                        {labels.begin(), labels.end()}, std::move(edges));
}

LabeledGraph labeled_cycle(std::span<const Label> labels, Label alphabet_size) {
    std::vector<Edge> edges;
    const auto n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return LabeledGraph(true, alphabet_for(labels, alphabet_size),
                        {labels.begin(), labels.end()}, std::move(edges));
}

}  // namespace lgp
