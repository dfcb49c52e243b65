#include <doctest.h>

#include "lgp/general.hpp"
#include "lgp/oracle.hpp"
#include "lgp/reductions.hpp"
#include "support/random_graphs.hpp"

using namespace lgp;
using namespace lgp::testing;

namespace {

OVInstance instance(std::vector<BitVector> a, std::vector<BitVector> b) {
    OVInstance inst;
    inst.dimension = a.empty() ? 0 : a.front().size();
    inst.a = std::move(a);
    inst.b = std::move(b);
    return inst;
}

const OVInstance orthogonal = instance({{1, 0}, {0, 1}}, {{1, 0}, {1, 1}});
const OVInstance not_orthogonal = instance({{1, 1}, {1, 0}}, {{1, 1}, {1, 0}});
const OVInstance tiny = instance({{0}}, {{0}});

std::size_t max_in_degree(const LabeledGraph& g) {
    std::size_t d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        d = std::max(d, g.in(v).size());
    }
    return d;
}

std::size_t max_out_degree(const LabeledGraph& g) {
    std::size_t d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        d = std::max(d, g.out(v).size());
    }
    return d;
}

std::size_t longest_path(const LabeledGraph& g) {
    const auto t = longest_paths(g);
    return g.vertex_count() == 0 ? 0 : *std::max_element(t.from.begin(), t.from.end());
}

void check_ov_structure(const LabeledGraph& g, std::size_t k, std::size_t d) {
    CHECK(is_deterministic(g).deterministic);
    CHECK(is_acyclic(g));
    CHECK(g.alphabet_size() == 2);
    CHECK(max_in_degree(g) <= 2);
    CHECK(max_out_degree(g) <= 2);
    CHECK(longest_path(g) == k + d + 1);
}

std::size_t lrsp_length(const LabeledGraph& g) {
    const auto ans = lrsp_general(g);
    REQUIRE(ans.kind == RepeatKind::finite);
    return ans.finite.length;
}

}  // namespace

TEST_CASE("ov_brute") {
    CHECK(ov_brute(instance({{1, 0}}, {{0, 1}})));
    CHECK_FALSE(ov_brute(instance({{1}}, {{1}})));
    CHECK_FALSE(ov_brute(not_orthogonal));
    CHECK(ov_brute(orthogonal));
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(32) == 5);
    CHECK(ceil_log2(33) == 6);
}

TEST_CASE("ov_to_lrsp examples") {
    const auto yes = ov_to_lrsp(orthogonal);
    CHECK(yes.k == 1);
    CHECK(yes.threshold == 5);
    check_ov_structure(yes.graph, 1, 2);
    CHECK(lrsp_length(yes.graph) == 5);

    const auto no = ov_to_lrsp(not_orthogonal);
    CHECK(no.threshold == 5);
    CHECK(lrsp_length(no.graph) < 5);

    const auto one = ov_to_lrsp(tiny);
    CHECK(one.k == 0);
    CHECK(one.threshold == 3);
    check_ov_structure(one.graph, 0, 1);
    CHECK(lrsp_length(one.graph) == 3);

    CHECK_THROWS_AS(ov_to_lrsp(instance({{1, 0}, {1, 0}}, {{0, 0}, {1, 1}})), Error);
    CHECK_THROWS_AS(ov_to_lrsp(instance({{1, 0}}, {{0, 0}, {1, 1}})), Error);
}

TEST_CASE("ov_to_lrsp layout") {
    const auto out = ov_to_lrsp(orthogonal);
    // U: source + one level; K: root + trie of 10, 01; T: 3 nodes; two gadgets
    std::vector<std::string> names;
    for (const auto& g : out.gadgets) {
        names.push_back(g.name);
    }
    CHECK(names == std::vector<std::string>{"U", "K", "T", "Gb0", "Gb1"});
    CHECK(out.gadgets[0].end - out.gadgets[0].begin == 3);
    CHECK(out.gadgets[1].end - out.gadgets[1].begin == 5);
    CHECK(out.gadgets[2].end - out.gadgets[2].begin == 3);
    // b = (1,0): levels {0}, {0,1}; b = (1,1): {0}, {0}
    CHECK(out.gadgets[3].end - out.gadgets[3].begin == 4);
    CHECK(out.gadgets[4].end - out.gadgets[4].begin == 3);
    CHECK(out.gadgets.back().end == out.graph.vertex_count());
}

TEST_CASE("ov_to_lcsp and ov_to_msp_star examples") {
    for (const auto* inst : {&orthogonal, &not_orthogonal, &tiny}) {
        const bool expected = ov_brute(*inst);
        const auto pair = ov_to_lcsp(*inst);
        const auto common = lcsp_general(pair.g1, pair.g2);
        CHECK_FALSE(common.infinite);
        CHECK((common.finite.length == pair.threshold) == expected);
        CHECK(common.finite.length <= pair.threshold);

        const auto star = ov_to_msp_star(*inst);
        const auto value = msp_star(star.g1, star.g2, star.v1, star.v2);
        CHECK((value == star.threshold) == expected);
        CHECK(value <= star.threshold);
    }
    const auto degenerate = instance({{1}}, {{1}});
    const auto pair = ov_to_lcsp(degenerate);
    CHECK(lcsp_general(pair.g1, pair.g2).finite.length < pair.threshold);
}

TEST_CASE("random OV instances: structure and threshold agreement") {
    Rng rng(700);
    for (int i = 0; i < 60; ++i) {
        const auto d = uniform(rng, 1, 6);
        const auto n = uniform(rng, 1, std::min<std::size_t>(8, std::size_t{1} << d));
        const auto inst = random_ov(n, d, rng(), uniform_real(rng, 0.2, 0.8));
        const auto out = ov_to_lrsp(inst);
        check_ov_structure(out.graph, out.k, d);
        CHECK(out.graph.vertex_count() <= 2 + 2 * out.k + (std::size_t{2} << out.k) + n * (3 * d + 2));
        const bool expected = ov_brute(inst);
        CHECK((lrsp_length(out.graph) == out.threshold) == expected);
        const auto pair = ov_to_lcsp(inst);
        CHECK((lcsp_general(pair.g1, pair.g2).finite.length == pair.threshold) == expected);
        CHECK((msp_star(pair.g1, pair.g2, pair.v1, pair.v2) == pair.threshold) == expected);
    }
}

TEST_CASE("smlg_to_lrsp examples") {
    const auto yes = smlg_to_lrsp(P("ab"), letters("ab"));
    CHECK(yes.threshold == 5);
    CHECK(is_deterministic(yes.graph).deterministic);
    CHECK(is_acyclic(yes.graph));
    CHECK(lrsp_length(yes.graph) == 5);

    const auto no = smlg_to_lrsp(P("ab"), letters("ba"));
    CHECK(lrsp_length(no.graph) < 5);

    const LabeledGraph fork(true, 2, {0, 1, 1}, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(smlg_to_lrsp(fork, letters("ab")), Error);
    CHECK_THROWS_AS(smlg_to_lrsp(C("ab"), letters("ab")), Error);
    CHECK_THROWS_AS(smlg_to_lrsp(P("ab"), LabelString{}), Error);
}

TEST_CASE("smlg_to_lrsp layout and fresh labels") {
    const auto out = smlg_to_lrsp(P("ab"), LabelString{3});
    // pattern label 3 lies outside the graph alphabet: fresh labels start at 4
    CHECK(out.graph.alphabet_size() == 4 + 2);
    std::vector<std::string> names;
    for (const auto& g : out.gadgets) {
        names.push_back(g.name);
    }
    CHECK(names == std::vector<std::string>{"G", "H1.path", "H1.level", "H2.path", "H2.level", "P"});
    CHECK(out.graph.label(out.gadgets[2].begin) == 4);
    CHECK(out.graph.label(out.gadgets[1].begin) == 0);
}

TEST_CASE("random SMLG instances agree with brute force") {
    Rng rng(900);
    for (int i = 0; i < 100; ++i) {
        const auto sigma = static_cast<Label>(uniform(rng, 1, 3));
        const auto g = make_deterministic(random_dag(rng, uniform(rng, 1, 8), sigma, 0.4));
        const auto pattern = random_string(rng, uniform(rng, 1, 5), sigma);
        const auto out = smlg_to_lrsp(g, pattern);
        CHECK(is_deterministic(out.graph).deterministic);
        CHECK((lrsp_length(out.graph) == out.threshold) == oracle::brute_smlg(g, pattern));
        CHECK(lrsp_length(out.graph) <= out.threshold);
    }
}

TEST_CASE("parse_ov") {
    const auto inst = parse_ov("# vectors\n1 0\n0 1\n\n10\n11\n");
    CHECK(inst.dimension == 2);
    CHECK(inst.a == orthogonal.a);
    CHECK(inst.b == orthogonal.b);
    CHECK_THROWS_AS(parse_ov("1 0\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_ov("1 0\n\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_ov("1 2\n\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_ov("1 0\n\n0 1\n\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_ov("10\n01\n\n11\n"), ParseError);
}

TEST_CASE("random_ov") {
    const auto a = random_ov(8, 3, 5);
    const auto b = random_ov(8, 3, 5);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK_NOTHROW(validate(a));
    CHECK_THROWS_AS(random_ov(9, 3, 1), Error);
    CHECK_THROWS_AS(random_ov(0, 3, 1), Error);
}
