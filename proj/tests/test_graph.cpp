#include <doctest.h>

#include "lgp/graph.hpp"
#include "support/random_graphs.hpp"

using namespace lgp;
using namespace lgp::testing;

TEST_CASE("parse a small directed path") {
    const auto g = parse_graph("directed\n2 1\n0 1\n0 1\n");
    CHECK(g.directed());
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.alphabet_size() == 2);
    CHECK(g.label(0) == 0);
    CHECK(g.label(1) == 1);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
    CHECK(g == P("ab"));
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("self-loop in undirected graph") {
        try {
            parse_graph("undirected\n2 1\n0 1\n0 0\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
            CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        }
    }
    SUBCASE("endpoint out of range") {
        try {
            parse_graph("directed\n2 1\n0 1\n0 5\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
            CHECK(std::string(e.what()).find("out of range") != std::string::npos);
        }
    }
    SUBCASE("duplicate edge") {
        CHECK_THROWS_AS(parse_graph("directed\n2 2\n0 1\n0 1\n0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("undirected\n2 2\n0 1\n0 1\n1 0\n"), ParseError);
    }
    SUBCASE("bad header and sizes") {
        CHECK_THROWS_AS(parse_graph("digraph\n1 0\n0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("directed\n2 0\n0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("directed\n2 1\n0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("directed\n1 0 1\n3\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("directed\n1 0\n0\n0 0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("directed\nx 0\n"), ParseError);
        CHECK_THROWS_AS(parse_graph(""), ParseError);
    }
}

TEST_CASE("comments, blank lines, explicit sigma and letters") {
    const auto g = parse_graph("# a comment\ndirected\n\n3 2 5\n# labels\n0 4 2\n0 1\n1 2\n");
    CHECK(g.alphabet_size() == 5);
    CHECK(g.label(1) == 4);

    ParseOptions chars{true};
    const auto h = parse_graph("directed\n3 2\na b a\n0 1\n1 2\n", chars);
    CHECK(h == P("aba"));
    CHECK(parse_pattern("abc", chars) == letters("abc"));
    CHECK(parse_pattern("a b c", chars) == letters("abc"));
    CHECK(parse_pattern("0 1 2") == LabelString{0, 1, 2});
    CHECK_THROWS_AS(parse_pattern("0 1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_pattern("# nothing\n"), ParseError);
}

TEST_CASE("empty graph and self-loops") {
    const auto g = parse_graph("directed\n0 0\n");
    CHECK(g.vertex_count() == 0);
    const auto loop = parse_graph("directed\n1 1\n0\n0 0\n");
    CHECK(loop.has_edge(0, 0));
    CHECK_THROWS_AS(LabeledGraph(false, 1, {0}, {{0, 0}}), Error);
}

TEST_CASE("serialize round trip") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto n = uniform(rng, 0, 8);
        const auto sigma = static_cast<Label>(uniform(rng, 1, 4));
        const auto g = i % 2 ? random_digraph(rng, n, sigma, 0.3) : random_undirected(rng, n, sigma, 0.4);
        const auto text = serialize(g);
        const auto back = parse_graph(text);
        CHECK(back == g);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("spell") {
    CHECK(spell(P("ab"), Walk{0, 1}) == letters("ab"));
    CHECK(spell(P("ab"), Walk{1}) == letters("b"));
    CHECK(spell(C("ab"), Walk{0, 1, 0, 1}) == letters("abab"));
    CHECK_THROWS_AS(spell(P("ab"), Walk{1, 0}), Error);
    CHECK(is_walk(undirected_path("ab"), Walk{1, 0, 1}));
    CHECK_FALSE(is_walk(P("ab"), Walk{}));
}

TEST_CASE("spelling length equals walk vertex count") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto g = random_digraph(rng, uniform(rng, 1, 6), 3, 0.4);
        Walk w{static_cast<Vertex>(uniform(rng, 0, g.vertex_count() - 1))};
        while (w.size() < 8 && !g.out(w.back()).empty()) {
            const auto out = g.out(w.back());
            w.push_back(out[uniform(rng, 0, out.size() - 1)]);
        }
        CHECK(spell(g, w).size() == w.size());
    }
}

TEST_CASE("normalize") {
    const auto ab = normalize(P("ab"));
    CHECK(ab.isolated_vertices.empty());
    CHECK_FALSE(ab.has_shared_label);

    const auto two = normalize(LabeledGraph(true, 1, {0, 0}, {}));
    CHECK(two.isolated_vertices == std::vector<Vertex>{0, 1});
    CHECK(two.has_shared_label);

    const auto aab = normalize(P("aab"));
    CHECK(aab.has_shared_label);
    CHECK(aab.label_histogram == std::map<Label, std::size_t>{{0, 2}, {1, 1}});
}

TEST_CASE("is_deterministic") {
    CHECK(is_deterministic(P("abc")).deterministic);
    const auto fork = LabeledGraph(true, 3, {0, 1, 1}, {{0, 1}, {0, 2}});
    const auto d = is_deterministic(fork);
    CHECK_FALSE(d.deterministic);
    CHECK(d.witness == Vertex{0});
    CHECK(is_deterministic(LabeledGraph(true, 3, {0, 1, 2}, {{0, 1}, {0, 2}})).deterministic);
    CHECK_THROWS_AS(is_deterministic(undirected_path("ab")), Error);
}

TEST_CASE("symmetrize") {
    const auto s = symmetrize(undirected_path("ab"));
    CHECK(s.directed());
    CHECK(s.has_edge(0, 1));
    CHECK(s.has_edge(1, 0));
    CHECK(symmetrize(LabeledGraph(false, 1, {0, 0}, {})).edge_count() == 0);
    const LabeledGraph triangle(false, 3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(symmetrize(triangle).edge_count() == 6);
    CHECK_THROWS_AS(symmetrize(P("ab")), Error);

    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto g = random_undirected(rng, uniform(rng, 0, 7), 2, 0.5);
        CHECK(symmetrize(g).edge_count() == 2 * g.edge_count());
    }
}

TEST_CASE("path and cycle helpers") {
    const auto c = C("a");
    CHECK(c.has_edge(0, 0));
    CHECK(C("ab").edge_count() == 2);
    CHECK(P("").vertex_count() == 0);
}
