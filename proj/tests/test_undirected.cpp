#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lgp/oracle.hpp"
#include "lgp/undirected.hpp"
#include "support/random_graphs.hpp"

using namespace lgp;
using namespace lgp::testing;

namespace {

bool is_simple_path(const LabeledGraph& g, const Walk& w) {
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    return is_walk(g, w) && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void check_path_witness(const LabeledGraph& g, const WitnessPair& w) {
    if (w.length == 0) {
        CHECK(w.first.empty());
        return;
    }
    CHECK(w.first.size() == w.length);
    CHECK(w.first != w.second);
    CHECK(is_simple_path(g, w.first));
    CHECK(is_simple_path(g, w.second));
    CHECK(spell(g, w.first) == w.string);
    CHECK(spell(g, w.second) == w.string);
}

// longest repeated substring by brute force
std::size_t naive_lrs(const LabelString& t) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            std::size_t k = 0;
            while (j + k < t.size() && t[i + k] == t[j + k]) {
                ++k;
            }
            best = std::max(best, k);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("walk occurrences") {
    const auto aba = lrsp_undirected_walks(undirected_path("aba"));
    CHECK(aba.kind == RepeatKind::infinite);
    CHECK(aba.r.empty());
    CHECK(aba.s == letters("ab"));
    CHECK(aba.lasso1 == Walk{0, 1});
    CHECK(aba.lasso2 == Walk{2, 1});

    const LabeledGraph triangle(false, 3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    const auto t = lrsp_undirected_walks(triangle);
    CHECK(t.kind == RepeatKind::finite);
    CHECK(t.finite.length == 0);

    const auto two = lrsp_undirected_walks(LabeledGraph(false, 1, {0, 0}, {}));
    CHECK(two.kind == RepeatKind::finite);
    CHECK(two.finite.length == 1);
    CHECK(two.finite.first == Walk{0});
    CHECK(two.finite.second == Walk{1});

    CHECK_THROWS_AS(lrsp_undirected_walks(P("ab")), Error);
}

TEST_CASE("walk mode matches the oracle and the directed pipeline") {
    Rng rng(61);
    for (int i = 0; i < 300; ++i) {
        const auto sigma = static_cast<Label>(uniform(rng, 1, 3));
        const auto g = random_undirected(rng, uniform(rng, 1, 6), sigma, uniform_real(rng, 0.0, 0.6));
        const auto ans = lrsp_undirected_walks(g);
        const auto sym = symmetrize(g);
        const auto c = oracle::brute_lrsp_classify(sym);
        CHECK((ans.kind == RepeatKind::infinite) == !c.finite);
        if (c.finite) {
            CHECK(c.length <= 1);
            CHECK(ans.finite.length == c.length);
        } else {
            for (std::size_t m = 1; m <= 3; ++m) {
                CHECK(oracle::count_occurrences(sym, expand_answer(ans, m)) >= 2);
            }
        }
        const auto directed = lrsp_general(sym);
        CHECK((directed.kind == RepeatKind::infinite) == (ans.kind == RepeatKind::infinite));
    }
}

TEST_CASE("path and tree recognition") {
    CHECK(is_path_graph(undirected_path("a")));
    CHECK(is_path_graph(undirected_path("abc")));
    const LabeledGraph star(false, 2, {0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(is_path_graph(star));
    CHECK(is_tree(star));
    const LabeledGraph forest(false, 1, {0, 0, 0, 0}, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_tree(forest));
    CHECK_FALSE(is_tree(P("ab")));
}

TEST_CASE("suffix and lcp arrays") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto t = random_string(rng, uniform(rng, 0, 30), static_cast<Label>(uniform(rng, 1, 4)));
        const auto sa = suffix_array(t);
        std::vector<std::size_t> expected(t.size());
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        std::sort(expected.begin(), expected.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(t.begin() + static_cast<std::ptrdiff_t>(a), t.end(),
                                                t.begin() + static_cast<std::ptrdiff_t>(b), t.end());
        });
        CHECK(sa == expected);
        const auto lcp = lcp_array(t, sa);
        for (std::size_t k = 1; k < sa.size(); ++k) {
            std::size_t h = 0;
            while (sa[k] + h < t.size() && sa[k - 1] + h < t.size() && t[sa[k] + h] == t[sa[k - 1] + h]) {
                ++h;
            }
            CHECK(lcp[k] == h);
        }
        if (!t.empty()) {
            CHECK(*std::max_element(lcp.begin(), lcp.end()) == naive_lrs(t));
        }
    }
}

TEST_CASE("path occurrences on path graphs") {
    const auto abab = undirected_path("abab");
    const auto w = lrsp_undirected_path_paths(abab);
    CHECK(w.length == 3);
    check_path_witness(abab, w);

    CHECK(lrsp_undirected_path_paths(undirected_path("ab")).length == 0);

    const auto aa = undirected_path("aa");
    const auto two = lrsp_undirected_path_paths(aa);
    CHECK(two.length == 2);
    check_path_witness(aa, two);

    const auto aba = undirected_path("aba");
    CHECK(lrsp_undirected_path_paths(aba).length == 3);

    const auto abca = undirected_path("abca");
    const auto one = lrsp_undirected_path_paths(abca);
    CHECK(one.length == 1);
    check_path_witness(abca, one);

    CHECK(lrsp_undirected_path_paths(undirected_path("a")).length == 0);
    const LabeledGraph star(false, 2, {0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(lrsp_undirected_path_paths(star), Error);
}

TEST_CASE("path solver matches brute force over subpaths") {
    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        const auto g = random_path_graph(rng, uniform(rng, 1, 12), static_cast<Label>(uniform(rng, 1, 3)));
        const auto w = lrsp_undirected_path_paths(g);
        CHECK(w.length == oracle::brute_lrsp_paths_undirected(g));
        check_path_witness(g, w);
    }
}

TEST_CASE("tree reduction structure") {
    const LabeledGraph aa(false, 1, {0, 0}, {{0, 1}});
    const auto r = tree_reduction(aa);
    CHECK(r.graph.vertex_count() == 6);
    CHECK(r.separator == 1);
    CHECK(r.graph.alphabet_size() == 2);
    CHECK(r.tree_size == 2);
    CHECK(is_acyclic(r.graph));
    // "aa" has two occurrences (0,1) and (1,0) in the tree, so T' reaches 2 + 2
    const auto ans = lrsp_general(r.graph);
    CHECK(ans.kind == RepeatKind::finite);
    CHECK(ans.finite.length == 4);

    const auto single = tree_reduction(LabeledGraph(false, 1, {0}, {}));
    CHECK(single.graph.vertex_count() == 2);
    CHECK(lrsp_general(single.graph).finite.length <= 1);

    const LabeledGraph star(false, 2, {0, 1, 1}, {{0, 1}, {0, 2}});
    // "bab" via (1,0,2) and (2,0,1)
    CHECK(lrsp_general(tree_reduction(star).graph).finite.length == 3 + 3);

    CHECK_THROWS_AS(tree_reduction(LabeledGraph(false, 1, {0, 0}, {})), Error);
}

TEST_CASE("path occurrences on trees") {
    const auto aba = undirected_path("aba");
    const auto w = lrsp_undirected_tree_paths(aba);
    CHECK(w.length == 3);
    check_path_witness(aba, w);

    const LabeledGraph distinct(false, 4, {0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(lrsp_undirected_tree_paths(distinct).length == 0);

    // caterpillar: spine a-b-a-b with repeated leaf labels
    const LabeledGraph caterpillar(false, 3, {0, 1, 0, 1, 2, 2, 2, 2},
                                   {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    const auto c = lrsp_undirected_tree_paths(caterpillar);
    CHECK(c.length == oracle::brute_lrsp_paths_undirected(caterpillar));
    check_path_witness(caterpillar, c);
}

TEST_CASE("tree solver matches brute force and the reduction offset") {
    Rng rng(202);
    for (int i = 0; i < 300; ++i) {
        const auto n = uniform(rng, 1, 8);
        const auto t = random_tree(rng, n, static_cast<Label>(uniform(rng, 1, 3)));
        const auto brute = oracle::brute_lrsp_paths_undirected(t);
        const auto w = lrsp_undirected_tree_paths(t);
        CHECK(w.length == brute);
        check_path_witness(t, w);
        if (n <= 6 && brute >= 1) {
            CHECK(lrsp_general(tree_reduction(t).graph).finite.length - n == brute);
        }
    }
}
