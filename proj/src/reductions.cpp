#include "lgp/reductions.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <random>
#include <set>
#include <sstream>

#include "lgp/dag.hpp"

namespace lgp {

namespace {

// c is relabeled 0 from the start
constexpr Label zero = 0;
constexpr Label one = 1;
constexpr Label c_label = zero;

struct Builder {
    std::vector<Label> labels;
    std::vector<Edge> edges;
    std::vector<GadgetRange> gadgets;

    Vertex add(Label l) {
        labels.push_back(l);
        return static_cast<Vertex>(labels.size() - 1);
    }
    Vertex next() const { return static_cast<Vertex>(labels.size()); }
    void connect(std::span<const Vertex> from, std::span<const Vertex> to) {
        for (auto u : from) {
            for (auto v : to) {
                edges.emplace_back(u, v);
            }
        }
    }
    void close(std::string name, Vertex begin) { gadgets.push_back({std::move(name), begin, next()}); }
    LabeledGraph graph(Label sigma) { return LabeledGraph(true, sigma, labels, edges); }
};

// returns the source of U
Vertex build_ga(const OVInstance& inst, std::size_t k, Builder& b) {
    const Vertex begin = b.next();
    const Vertex source = b.add(c_label);
    std::vector<Vertex> previous{source};
    for (std::size_t level = 0; level < k; ++level) {
        const std::vector<Vertex> current{b.add(zero), b.add(one)};
        b.connect(previous, current);
        previous = current;
    }
    b.close("U", begin);

    const Vertex trie_begin = b.next();
    const Vertex root = b.add(c_label);
    b.connect(previous, std::vector<Vertex>{root});
    std::vector<std::array<Vertex, 2>> children{{no_vertex, no_vertex}};
    for (const auto& a : inst.a) {
        Vertex node = root;
        for (auto bit : a) {
            auto& child = children[node - root][bit];
            if (child == no_vertex) {
                child = b.add(bit ? one : zero);
                b.edges.emplace_back(node, child);
                children.push_back({no_vertex, no_vertex});
            }
            node = children[node - root][bit];
        }
    }
    b.close("K", trie_begin);
    return source;
}

// returns the root of T
Vertex build_gb(const OVInstance& inst, std::size_t k, Builder& b) {
    const Vertex begin = b.next();
    const std::size_t tree_size = (std::size_t{2} << k) - 1;
    for (std::size_t j = 0; j < tree_size; ++j) {
        b.add(j == 0 ? c_label : (j % 2 == 1 ? zero : one));
    }
    for (std::size_t j = 0; 2 * j + 2 < tree_size; ++j) {
        b.edges.emplace_back(begin + j, begin + 2 * j + 1);
        b.edges.emplace_back(begin + j, begin + 2 * j + 2);
    }
    b.close("T", begin);
    const Vertex first_leaf = begin + static_cast<Vertex>((std::size_t{1} << k) - 1);

    for (std::size_t j = 0; j < inst.b.size(); ++j) {
        const Vertex gadget = b.next();
        const Vertex source = b.add(c_label);
        b.edges.emplace_back(first_leaf + static_cast<Vertex>(j), source);
        std::vector<Vertex> previous{source};
        for (auto bit : inst.b[j]) {
            std::vector<Vertex> current{b.add(zero)};
            if (bit == 0) {
                current.push_back(b.add(one));
            }
            b.connect(previous, current);
            previous = current;
        }
        b.close("Gb" + std::to_string(j), gadget);
    }
    return begin;
}

}  // namespace

void validate(const OVInstance& inst) {
    if (inst.a.empty() || inst.a.size() != inst.b.size()) {
        throw Error("OV instance needs |A| = |B| >= 1");
    }
    if (inst.dimension == 0) {
        throw Error("OV dimension must be at least 1");
    }
    for (const auto* side : {&inst.a, &inst.b}) {
        for (const auto& v : *side) {
            if (v.size() != inst.dimension) {
                throw Error("OV vector of wrong dimension");
            }
            if (std::any_of(v.begin(), v.end(), [](auto x) { return x > 1; })) {
                throw Error("OV vector entries must be 0 or 1");
            }
        }
    }
    std::set<BitVector> seen(inst.a.begin(), inst.a.end());
    if (seen.size() != inst.a.size()) {
        throw Error("duplicate vector in A");
    }
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

ReductionOutput smlg_to_lrsp(const LabeledGraph& g, std::span<const Label> pattern) {
    if (!g.directed()) {
        throw Error("the reduction needs a directed graph");
    }
    if (g.vertex_count() == 0) {
        throw Error("the reduction needs a non-empty graph");
    }
    if (pattern.empty()) {
        throw Error("pattern must be non-empty");
    }
    if (!is_deterministic(g).deterministic) {
        throw Error("the reduction needs a deterministic graph");
    }
    if (!is_acyclic(g)) {
        throw Error("the reduction needs an acyclic graph");
    }
    const auto n = static_cast<Vertex>(g.vertex_count());
    const Label base = std::max(g.alphabet_size(), *std::max_element(pattern.begin(), pattern.end()) + 1);
    const Label filler = g.label(0);

    Builder b;
    b.labels.assign(g.labels().begin(), g.labels().end());
    b.edges.assign(g.edges().begin(), g.edges().end());
    b.close("G", 0);

    const Vertex pattern_source = n + 4 * n;
    for (int copy = 0; copy < 2; ++copy) {
        const std::string name = copy == 0 ? "H1" : "H2";
        const Vertex path = b.next();
        for (Vertex i = 0; i < n; ++i) {
            b.add(filler);
            if (i > 0) {
                b.edges.emplace_back(path + i - 1, path + i);
            }
        }
        b.close(name + ".path", path);
        const Vertex level = b.next();
        for (Vertex i = 0; i < n; ++i) {
            b.add(base + i);
            b.edges.emplace_back(path + n - 1, level + i);
            b.edges.emplace_back(level + i, copy == 0 ? i : pattern_source);
        }
        b.close(name + ".level", level);
    }
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        b.add(pattern[i]);
        if (i > 0) {
            b.edges.emplace_back(static_cast<Vertex>(pattern_source + i - 1),
                                 static_cast<Vertex>(pattern_source + i));
        }
    }
    b.close("P", pattern_source);

    ReductionOutput out;
    out.graph = b.graph(base + n);
    out.threshold = n + pattern.size() + 1;
    out.gadgets = std::move(b.gadgets);
    return out;
}

ReductionOutput ov_to_lrsp(const OVInstance& inst) {
    validate(inst);
    const auto k = ceil_log2(inst.a.size());
    Builder b;
    build_ga(inst, k, b);
    build_gb(inst, k, b);
    ReductionOutput out;
    out.graph = b.graph(2);
    out.threshold = k + inst.dimension + 2;
    out.k = k;
    out.gadgets = std::move(b.gadgets);
    return out;
}

OVPair ov_to_lcsp(const OVInstance& inst) {
    validate(inst);
    const auto k = ceil_log2(inst.a.size());
    Builder ga;
    Builder gb;
    OVPair out;
    out.v2 = build_ga(inst, k, ga);
    out.v1 = build_gb(inst, k, gb);
    out.g1 = gb.graph(2);
    out.g2 = ga.graph(2);
    out.threshold = k + inst.dimension + 2;
    out.k = k;
    return out;
}

OVPair ov_to_msp_star(const OVInstance& inst) {
    return ov_to_lcsp(inst);
}

bool ov_brute(const OVInstance& inst) {
    for (const auto& a : inst.a) {
        for (const auto& b : inst.b) {
            bool orthogonal = true;
            for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
                if (a[i] && b[i]) {
                    orthogonal = false;
                    break;
                }
            }
            if (orthogonal) {
                return true;
            }
        }
    }
    return false;
}

OVInstance parse_ov(std::istream& in) {
    OVInstance inst;
    std::vector<BitVector>* block = &inst.a;
    bool in_block = false;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') {
            continue;
        }
        if (first == std::string::npos) {
            if (in_block && block == &inst.a) {
                block = &inst.b;
                in_block = false;
            } else if (in_block) {
                in_block = false;
                block = nullptr;
            }
            continue;
        }
        if (block == nullptr) {
            throw ParseError(number, "content after the B block");
        }
        std::istringstream tokens(line);
        std::vector<std::string> parts;
        for (std::string t; tokens >> t;) {
            parts.push_back(t);
        }
        std::string digits;
        if (parts.size() == 1) {
            digits = parts[0];
        } else {
            for (const auto& p : parts) {
                if (p.size() != 1) {
                    throw ParseError(number, "expected 0/1 entries");
                }
                digits += p;
            }
        }
        BitVector v;
        for (char ch : digits) {
            if (ch != '0' && ch != '1') {
                throw ParseError(number, "expected 0/1 entries");
            }
            v.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        if (inst.dimension == 0) {
            inst.dimension = v.size();
        } else if (v.size() != inst.dimension) {
            throw ParseError(number, "vector of dimension " + std::to_string(v.size()) + ", expected " +
                                         std::to_string(inst.dimension));
        }
        block->push_back(std::move(v));
        in_block = true;
    }
    if (inst.b.empty()) {
        throw ParseError(number, "missing B block");
    }
    if (inst.a.size() != inst.b.size()) {
        throw ParseError(number, "A and B must have the same number of vectors");
    }
    return inst;
}

OVInstance parse_ov(const std::string& text) {
    std::istringstream in(text);
    return parse_ov(in);
}

OVInstance random_ov(std::size_t n, std::size_t d, std::uint64_t seed, double density) {
    if (n == 0 || d == 0) {
        throw Error("random OV needs n >= 1 and d >= 1");
    }
    if (d < 63 && n > (std::size_t{1} << d)) {
        throw Error("n exceeds 2^d, A cannot hold n distinct vectors");
    }
    if (!(density >= 0.0 && density <= 1.0)) {
        throw Error("density must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    auto draw = [&] {
        BitVector v(d);
        for (auto& x : v) {
            x = coin(rng) ? 1 : 0;
        }
        return v;
    };
    OVInstance inst;
    inst.dimension = d;
    std::set<BitVector> seen;
    const std::size_t max_attempts = 1000 * n + 1000;
    for (std::size_t attempt = 0; inst.a.size() < n; ++attempt) {
        if (attempt == max_attempts) {
            throw Error("could not draw distinct vectors at this density");
        }
        auto v = draw();
        if (seen.insert(v).second) {
            inst.a.push_back(std::move(v));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        inst.b.push_back(draw());
    }
    return inst;
}

}  // namespace lgp
