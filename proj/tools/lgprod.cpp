// lgprod: labeled direct product toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lgp/dag.hpp"
#include "lgp/general.hpp"
#include "lgp/graph.hpp"
#include "lgp/oracle.hpp"
#include "lgp/product.hpp"
#include "lgp/reductions.hpp"
#include "lgp/undirected.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lgp;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    bool chars = false;
    bool as_json = false;
    ParseOptions parse() const { return {chars}; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

LabeledGraph load_graph(const Context& ctx, const std::string& path) {
    try {
        return parse_graph(read_file(path), ctx.parse());
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

LabelString load_pattern(const Context& ctx, const std::string& path) {
    try {
        return parse_pattern(read_file(path), ctx.parse());
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string label_token(const Context& ctx, Label l) {
    if (ctx.chars && l < 26) {
        return std::string(1, static_cast<char>('a' + l));
    }
    return std::to_string(l);
}

std::string join_labels(const Context& ctx, std::span<const Label> s, const char* empty = "") {
    if (s.empty()) {
        return empty;
    }
    std::string out;
    for (auto l : s) {
        if (!out.empty()) {
            out += ' ';
        }
        out += label_token(ctx, l);
    }
    return out;
}

std::string join_vertices(std::span<const Vertex> w) {
    std::string out;
    for (auto v : w) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(v);
    }
    return out;
}

json labels_json(const Context& ctx, std::span<const Label> s) {
    json arr = json::array();
    for (auto l : s) {
        if (ctx.chars) {
            arr.push_back(label_token(ctx, l));
        } else {
            arr.push_back(l);
        }
    }
    return arr;
}

json value_json(std::size_t value) {
    return value == infinite_length ? json("inf") : json(value);
}

std::string value_text(std::size_t value) {
    return value == infinite_length ? "inf" : std::to_string(value);
}

void emit_witness(const Context& ctx, const WitnessPair& w, json& out) {
    out["kind"] = "finite";
    out["length"] = w.length;
    if (ctx.as_json) {
        out["string"] = labels_json(ctx, w.string);
        out["walk1"] = w.first;
        out["walk2"] = w.second;
        return;
    }
    std::cout << "LEN " << w.length << '\n';
    if (w.length > 0) {
        std::cout << "STRING " << join_labels(ctx, w.string) << '\n';
        std::cout << "WALK1 " << join_vertices(w.first) << '\n';
        std::cout << "WALK2 " << join_vertices(w.second) << '\n';
    }
}

void emit_repeat(const Context& ctx, const RepeatAnswer& ans, json& out) {
    if (ans.kind == RepeatKind::finite) {
        emit_witness(ctx, ans.finite, out);
        return;
    }
    const bool infinite = ans.kind == RepeatKind::infinite;
    if (ctx.as_json) {
        out["kind"] = infinite ? "infinite" : "unbounded";
        out["r"] = labels_json(ctx, ans.r);
        out["s"] = labels_json(ctx, ans.s);
        out["walk1"] = ans.lasso1;
        out["walk2"] = ans.lasso2;
        return;
    }
    std::cout << (infinite ? "INFINITE" : "UNBOUNDED") << " R=" << join_labels(ctx, ans.r, "-")
              << " S=" << join_labels(ctx, ans.s, "-") << '\n';
    std::cout << "WALK1 " << join_vertices(ans.lasso1) << '\n';
    std::cout << "WALK2 " << join_vertices(ans.lasso2) << '\n';
}

void emit_generated(const Context& ctx, const LabeledGraph& g, std::size_t threshold,
                    std::optional<std::size_t> k, json& out) {
    if (ctx.as_json) {
        out["threshold"] = threshold;
        if (k) {
            out["k"] = *k;
        }
        out["graph"] = serialize(g);
        return;
    }
    std::cout << "# threshold=" << threshold << '\n';
    if (k) {
        std::cout << "# k=" << *k << '\n';
    }
    std::cout << serialize(g);
}

void finish(const Context& ctx, const json& out) {
    if (ctx.as_json) {
        std::cout << out.dump() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labeled direct product graphs: matching, common and repeated strings"};
    app.require_subcommand(1);
    Context ctx;
    app.add_flag("--chars", ctx.chars, "read and print letters a..z as labels 0..25");
    app.add_flag("--json", ctx.as_json, "print one JSON object instead of text lines");

    std::string graph1, graph2, pattern_path, map_path, vectors_path;
    Vertex v1 = 0, v2 = 0;
    std::string occurrences = "walks";
    std::size_t ov_n = 0, ov_d = 0;
    std::uint64_t seed = 1;
    double density = 0.5;
    std::string problem;
    std::optional<std::size_t> bound;

    auto* product = app.add_subcommand("product", "materialize G1 x G2");
    product->add_option("g1", graph1)->required()->check(CLI::ExistingFile);
    product->add_option("g2", graph2)->required()->check(CLI::ExistingFile);
    product->add_option("--map", map_path, "write the vertex mapping here instead of stdout");

    auto* size = app.add_subcommand("size", "product size without building it");
    size->add_option("g1", graph1)->required()->check(CLI::ExistingFile);
    size->add_option("g2", graph2)->required()->check(CLI::ExistingFile);

    auto* smlg_cmd = app.add_subcommand("smlg", "find an occurrence of a pattern");
    smlg_cmd->add_option("graph", graph1)->required()->check(CLI::ExistingFile);
    smlg_cmd->add_option("pattern", pattern_path)->required()->check(CLI::ExistingFile);

    auto* lcsp = app.add_subcommand("lcsp", "longest common string of two graphs");
    lcsp->add_option("g1", graph1)->required()->check(CLI::ExistingFile);
    lcsp->add_option("g2", graph2)->required()->check(CLI::ExistingFile);

    auto* msp = app.add_subcommand("msp", "matching statistics of G1 against G2");
    msp->add_option("g1", graph1)->required()->check(CLI::ExistingFile);
    msp->add_option("g2", graph2)->required()->check(CLI::ExistingFile);

    auto* msp_star_cmd = app.add_subcommand("msp-star", "matching statistics of one start pair");
    msp_star_cmd->add_option("g1", graph1)->required()->check(CLI::ExistingFile);
    msp_star_cmd->add_option("g2", graph2)->required()->check(CLI::ExistingFile);
    msp_star_cmd->add_option("--v1", v1)->required();
    msp_star_cmd->add_option("--v2", v2)->required();

    auto* lrsp = app.add_subcommand("lrsp", "longest repeated string of a directed graph");
    lrsp->add_option("graph", graph1)->required()->check(CLI::ExistingFile);

    auto* lrsp_u = app.add_subcommand("lrsp-undirected", "longest repeated string of an undirected graph");
    lrsp_u->add_option("graph", graph1)->required()->check(CLI::ExistingFile);
    lrsp_u->add_option("--occurrences", occurrences)->check(CLI::IsMember({"walks", "paths"}));

    auto* gen_ov = app.add_subcommand("gen-ov", "orthogonal vectors instance as an LRSP graph");
    gen_ov->add_option("--n", ov_n);
    gen_ov->add_option("--d", ov_d);
    gen_ov->add_option("--density", density, "probability of a 1 entry");
    auto* seed_opt = gen_ov->add_option("--seed", seed);
    auto* file_opt = gen_ov->add_option("--file", vectors_path)->check(CLI::ExistingFile);
    seed_opt->excludes(file_opt);

    auto* gen_smlg = app.add_subcommand("gen-smlg-lrsp", "pattern matching instance as an LRSP graph");
    gen_smlg->add_option("--graph", graph1)->required()->check(CLI::ExistingFile);
    gen_smlg->add_option("--pattern", pattern_path)->required()->check(CLI::ExistingFile);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
    oracle_cmd->add_option("--problem", problem)
        ->required()
        ->check(CLI::IsMember({"lrsp", "lcsp", "msp", "smlg"}));
    oracle_cmd->add_option("--bound", bound);
    oracle_cmd->add_option("inputs", graph1)->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("second", graph2)->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    json out = json::object();
    try {
        if (*product) {
            const auto g1 = load_graph(ctx, graph1);
            const auto g2 = load_graph(ctx, graph2);
            const auto p = build_product(g1, g2);
            std::vector<Label> labels;
            for (Vertex x = 0; x < p.vertex_count(); ++x) {
                labels.push_back(p.label(x));
            }
            const LabeledGraph as_graph(true, std::max(g1.alphabet_size(), g2.alphabet_size()),
                                        labels, p.edges());
            std::ostringstream mapping;
            for (Vertex x = 0; x < p.vertex_count(); ++x) {
                mapping << x << ' ' << p.vertex(x).left << ' ' << p.vertex(x).right << '\n';
            }
            if (!map_path.empty()) {
                std::ofstream file(map_path);
                if (!file) {
                    throw UsageError("cannot write " + map_path);
                }
                file << mapping.str();
            }
            if (ctx.as_json) {
                out["V"] = p.vertex_count();
                out["E"] = p.edge_count();
                out["graph"] = serialize(as_graph);
                json pairs = json::array();
                for (const auto& v : p.vertices()) {
                    pairs.push_back({v.left, v.right});
                }
                out["map"] = pairs;
            } else {
                std::cout << serialize(as_graph);
                if (map_path.empty()) {
                    std::cout << mapping.str();
                }
            }
        } else if (*size) {
            const auto g1 = load_graph(ctx, graph1);
            const auto g2 = load_graph(ctx, graph2);
            const auto s = product_size(g1, g2);
            if (ctx.as_json) {
                out["V"] = s.vertex_count;
                out["E"] = s.edge_count;
            } else {
                std::cout << "V=" << s.vertex_count << " E=" << s.edge_count << '\n';
            }
        } else if (*smlg_cmd) {
            const auto g = load_graph(ctx, graph1);
            const auto pattern = load_pattern(ctx, pattern_path);
            if (const auto occ = smlg(g, pattern)) {
                if (ctx.as_json) {
                    out["match"] = true;
                    out["length"] = occ->walk.size();
                    out["string"] = labels_json(ctx, occ->string);
                    out["walk1"] = occ->walk;
                } else {
                    std::cout << "LEN " << occ->walk.size() << '\n';
                    std::cout << "STRING " << join_labels(ctx, occ->string) << '\n';
                    std::cout << "WALK1 " << join_vertices(occ->walk) << '\n';
                }
            } else if (ctx.as_json) {
                out["match"] = false;
            } else {
                std::cout << "NO-MATCH\n";
            }
        } else if (*lcsp) {
            const auto ans = lcsp_general(load_graph(ctx, graph1), load_graph(ctx, graph2));
            if (!ans.infinite) {
                emit_witness(ctx, ans.finite, out);
            } else if (ctx.as_json) {
                out["kind"] = "infinite";
                out["r"] = json::array();
                out["s"] = labels_json(ctx, ans.period);
                out["walk1"] = ans.cycle1;
                out["walk2"] = ans.cycle2;
            } else {
                std::cout << "INFINITE R=- S=" << join_labels(ctx, ans.period) << '\n';
                std::cout << "WALK1 " << join_vertices(ans.cycle1) << '\n';
                std::cout << "WALK2 " << join_vertices(ans.cycle2) << '\n';
            }
        } else if (*msp) {
            const auto ms = msp_general(load_graph(ctx, graph1), load_graph(ctx, graph2));
            json values = json::array();
            for (std::size_t v = 0; v < ms.size(); ++v) {
                if (ctx.as_json) {
                    values.push_back(value_json(ms[v]));
                } else {
                    std::cout << "MS " << v << ' ' << value_text(ms[v]) << '\n';
                }
            }
            out["ms"] = values;
        } else if (*msp_star_cmd) {
            const auto value = msp_star(load_graph(ctx, graph1), load_graph(ctx, graph2), v1, v2);
            out["length"] = value_json(value);
            if (!ctx.as_json) {
                std::cout << "LEN " << value_text(value) << '\n';
            }
        } else if (*lrsp) {
            emit_repeat(ctx, lrsp_general(load_graph(ctx, graph1)), out);
        } else if (*lrsp_u) {
            const auto g = load_graph(ctx, graph1);
            if (g.directed()) {
                throw Error("lrsp-undirected needs an undirected graph");
            }
            if (occurrences == "walks") {
                emit_repeat(ctx, lrsp_undirected_walks(g), out);
            } else {
                const bool path = is_path_graph(g);
                if (!path && !is_tree(g)) {
                    throw Error("path occurrences are supported on path graphs and trees only");
                }
                const auto w = path ? lrsp_undirected_path_paths(g) : lrsp_undirected_tree_paths(g);
                out["case"] = path ? "path" : "tree";
                if (!ctx.as_json) {
                    std::cout << "CASE " << (path ? "path" : "tree") << '\n';
                }
                emit_witness(ctx, w, out);
            }
        } else if (*gen_ov) {
            OVInstance inst;
            if (!vectors_path.empty()) {
                try {
                    inst = parse_ov(read_file(vectors_path));
                } catch (const ParseError& e) {
                    throw UsageError(vectors_path + ": " + e.what());
                }
            } else {
                if (ov_n == 0 || ov_d == 0) {
                    throw UsageError("gen-ov needs --n and --d, or --file");
                }
                inst = random_ov(ov_n, ov_d, seed, density);
            }
            const auto r = ov_to_lrsp(inst);
            emit_generated(ctx, r.graph, r.threshold, r.k, out);
        } else if (*gen_smlg) {
            const auto r = smlg_to_lrsp(load_graph(ctx, graph1), load_pattern(ctx, pattern_path));
            emit_generated(ctx, r.graph, r.threshold, std::nullopt, out);
        } else if (*oracle_cmd) {
            const auto g1 = load_graph(ctx, graph1);
            if (problem == "lrsp") {
                const auto g = g1.directed() ? g1 : symmetrize(g1);
                const auto c = oracle::brute_lrsp_classify(g);
                const char* kind = c.finite ? "finite" : (oracle::brute_infinite_check(g) ? "infinite" : "unbounded");
                out["kind"] = kind;
                if (c.finite) {
                    out["length"] = c.length;
                }
                if (!ctx.as_json) {
                    if (c.finite) {
                        std::cout << "LEN " << c.length << '\n';
                    } else {
                        std::cout << (kind == std::string("infinite") ? "INFINITE" : "UNBOUNDED") << '\n';
                    }
                }
            } else if (problem == "smlg") {
                if (graph2.empty()) {
                    throw UsageError("oracle smlg needs a graph and a pattern file");
                }
                const bool found = oracle::brute_smlg(g1, load_pattern(ctx, graph2));
                out["match"] = found;
                if (!ctx.as_json) {
                    std::cout << (found ? "MATCH" : "NO-MATCH") << '\n';
                }
            } else {
                if (graph2.empty()) {
                    throw UsageError("oracle " + problem + " needs two graph files");
                }
                const auto g2 = load_graph(ctx, graph2);
                // one more than the number of product vertices detects infinite answers
                const std::size_t infinite_bound = oracle::matching_pairs(g1, g2) + 1;
                const std::size_t b = bound.value_or(infinite_bound);
                auto show = [&](std::size_t v) -> json {
                    if (v < b) {
                        return v;
                    }
                    return b >= infinite_bound ? json("inf") : json(">=" + std::to_string(b));
                };
                if (problem == "lcsp") {
                    const auto j = show(oracle::brute_lcsp(g1, g2, b));
                    out["length"] = j;
                    if (!ctx.as_json) {
                        std::cout << "LEN " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
                    }
                } else {
                    json values = json::array();
                    const auto ms = oracle::brute_msp(g1, g2, b);
                    for (std::size_t v = 0; v < ms.size(); ++v) {
                        const auto j = show(ms[v]);
                        values.push_back(j);
                        if (!ctx.as_json) {
                            std::cout << "MS " << v << ' ' << (j.is_string() ? j.get<std::string>() : j.dump())
                                      << '\n';
                        }
                    }
                    out["ms"] = values;
                }
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    finish(ctx, out);
    return 0;
}
