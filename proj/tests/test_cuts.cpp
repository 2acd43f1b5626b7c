#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "matchcov/classifier.hpp"

using namespace mc;

namespace {

bool oracle_mc(const MultiGraph& g) {
    auto cnt = oracle::pm_counts(g, oracle::pms(g));
    return g.order() % 2 == 0 && std::none_of(cnt.begin(), cnt.end(), [](int c) { return c == 0; });
}

int meets(const MultiGraph& g, const std::vector<EdgeId>& m, std::uint64_t shore) {
    int c = 0;
    for (EdgeId e : m) c += ((shore >> g.edge(e).u) ^ (shore >> g.edge(e).v)) & 1;
    return c;
}

// even 2-cuts by shore scan: two crossing edges, both sides even and nonempty
std::set<std::vector<EdgeId>> even_2cuts_oracle(const MultiGraph& g) {
    std::set<std::vector<EdgeId>> out;
    int n = g.order();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
        std::uint64_t x = (s << 1) | 1;
        if (x == (std::uint64_t{1} << n) - 1 || __builtin_popcountll(x) % 2) continue;
        std::vector<EdgeId> c;
        for (auto& e : g.edges())
            if (((x >> e.u) ^ (x >> e.v)) & 1) c.push_back(e.id);
        if (c.size() == 2) out.insert(c);
    }
    return out;
}

std::vector<std::string> named_fixtures() {
    return {"theta", "k4", "c6bar", "c4_doubled", "r8", "r10", "n10", "petersen", "quartic6", "quartic8",
            "glue_k4_k4", "glue_k4_k4_crossed", "glue_k4_prism", "glue_theta_k4", "glue_theta_theta",
            "glue_quartic_k4", "glue_quartic_c2", "glue_chain_k4", "glue_r8_k4", "glue_prism_prism"};
}

}  // namespace

TEST_CASE("even 2-cuts against the shore scan") {
    MultiGraph c4g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(find_even_2cuts(c4g).size() == 2);
    CHECK(find_even_2cuts(k4()).empty());
    for (auto& name : named_fixtures()) {
        CAPTURE(name);
        MultiGraph g = oracle::fixture(name);
        std::set<std::vector<EdgeId>> got;
        for (auto& c : find_even_2cuts(g)) {
            REQUIRE(c.size() == 2);
            REQUIRE(c.parity == Parity::even);
            REQUIRE(c.shore.test(0));
            got.insert(c.edge_ids);
        }
        REQUIRE(got == even_2cuts_oracle(g));
    }
}

TEST_CASE("glue then split recovers both sides") {
    std::vector<MultiGraph> parts{k4(), c6bar(), theta(), r8(), c2(4)};
    for (auto& a : parts)
        for (auto& b : parts)
            for (bool crossed : {false, true}) {
                MultiGraph g = glue(a, 0, b, b.size() - 1, crossed);
                REQUIRE(g.order() == a.order() + b.order());
                REQUIRE(g.size() == a.size() + b.size());
                EdgeId f = g.size() - 2, fp = g.size() - 1;
                Cut c = cut_of(g, VertexSet::from_mask(static_cast<std::size_t>(g.order()), (std::uint64_t{1} << a.order()) - 1));
                REQUIRE(c.edge_ids == std::vector<EdgeId>{f, fp});
                auto [x, y] = marked_components(g, c);
                REQUIRE(x.marker_edge == x.graph.size() - 1);
                REQUIRE(isomorphic(x.graph, a));
                REQUIRE(isomorphic(y.graph, b));
                REQUIRE(x.edge_origin[x.marker_edge] == -1);
                if (oracle_mc(a) && oracle_mc(b)) REQUIRE(oracle_mc(g));
            }
    CHECK_THROWS_AS(glue(k4(), 9, k4(), 0), Error);
}

TEST_CASE("matchings across a glued 2-cut") {
    MultiGraph a = k4(), b = c6bar();
    MultiGraph g = glue(a, 0, b, 0);
    EdgeId f = g.size() - 2, fp = g.size() - 1;
    auto ms = oracle::pms(g);
    auto na = oracle::pms(a), nb = oracle::pms(b);
    long n1 = static_cast<long>(na.size()), n2 = static_cast<long>(nb.size());
    long a1 = oracle::pm_counts(a, na)[0], a2 = oracle::pm_counts(b, nb)[0];
    long both = 0, none = 0;
    for (auto& m : ms) {
        bool hf = oracle::contains(m, f), hfp = oracle::contains(m, fp);
        REQUIRE(hf == hfp);  // a matching uses both or neither
        (hf ? both : none) += 1;
    }
    CHECK(both == a1 * a2);
    CHECK(none == (n1 - a1) * (n2 - a2));
}

TEST_CASE("decomposition pieces") {
    auto t = decompose_2cuts(k4());
    CHECK(t.nodes.size() == 1);
    CHECK(t.leaves().size() == 1);

    MultiGraph g = oracle::fixture("cubic18_four_pieces");
    auto d = decompose_2cuts(g);
    std::vector<std::string> expect{canonical_form(theta()), canonical_form(c6bar()), canonical_form(c6bar()),
                                    canonical_form(k4())};
    std::sort(expect.begin(), expect.end());
    CHECK(leaf_multiset(d) == expect);
    for (auto& l : d.leaves()) CHECK(find_even_2cuts(l).empty());

    std::mt19937 rng(4);
    for (int s = 0; s < 10; ++s) CHECK(leaf_multiset(decompose_2cuts(g, &rng)) == expect);

    // internal nodes reassemble by gluing their children on the markers
    for (auto& node : d.nodes) {
        if (!node.cut || node.graph.order() > 16) continue;
        auto& x = d.nodes[node.child[0]];
        auto& y = d.nodes[node.child[1]];
        REQUIRE(x.origin);
        REQUIRE(y.origin);
        MultiGraph re = glue(x.graph, x.origin->marker_edge, y.graph, y.origin->marker_edge);
        MultiGraph rx = glue(x.graph, x.origin->marker_edge, y.graph, y.origin->marker_edge, true);
        REQUIRE((isomorphic(re, node.graph) || isomorphic(rx, node.graph)));
    }
}

TEST_CASE("contraction") {
    MultiGraph g = c6bar();
    auto c = contract(g, VertexSet::from_mask(6, 0b000111));
    CHECK(c.g.order() == 4);
    CHECK(c.contraction_vertex == 3);
    CHECK(c.g.size() == 6);
    CHECK(c.deleted_inner.size() == 3);
    CHECK(isomorphic(c.g, k4()));
    CHECK(c.g.degree(c.contraction_vertex) == 3);
    CHECK_THROWS_AS(contract(g, VertexSet(6)), Error);
    // contracting a path shore keeps the crossing count
    MultiGraph r = r10();
    for (std::uint64_t s : {0b111ULL, 0b1110ULL, 0b11100000ULL}) {
        auto x = VertexSet::from_mask(10, s);
        auto cc = contract(r, x);
        REQUIRE(cc.g.degree(cc.contraction_vertex) == cut_of(r, x).size());
    }
}

TEST_CASE("splicing") {
    CHECK(isomorphic(splice(k4(), 0, k4(), 0), c6bar()));
    MultiGraph g = petersen();
    for (Vertex v : {0, 4, 9}) {
        MultiGraph h = splice_k4(g, v);
        REQUIRE(h.order() == 12);
        REQUIRE(h.regular_degree() == 3);
        REQUIRE(vertex_connectivity(h, 3) == 3);
    }
    CHECK_THROWS_AS(splice(k4(), 0, theta(), 0, {{0, 0}}), Error);
}

TEST_CASE("separating and tight cuts against matching oracles") {
    for (auto& name : {"k4", "c6bar", "r8", "r10", "n10", "petersen", "glue_k4_k4", "quartic8"}) {
        CAPTURE(name);
        MultiGraph g = oracle::fixture(name);
        int n = g.order();
        auto ms = oracle::pms(g);
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
            std::uint64_t x = (s << 1) | 1;
            if (__builtin_popcountll(x) % 2 == 0 || x == (std::uint64_t{1} << n) - 1) continue;
            Cut c = cut_of_mask(g, x);
            bool tight = std::all_of(ms.begin(), ms.end(), [&](auto& m) { return meets(g, m, x) == 1; });
            REQUIRE(is_tight_cut(g, c) == tight);
            bool by_m = true;
            for (EdgeId e = 0; e < g.size() && by_m; ++e) {
                bool ok = false;
                for (auto& m : ms) ok = ok || (oracle::contains(m, e) && meets(g, m, x) == 1);
                by_m = ok;
            }
            REQUIRE(is_separating_by_matchings(g, c) == by_m);
            // both contractions matching covered
            auto cx = contract(g, VertexSet::from_mask(static_cast<std::size_t>(n), x));
            auto cy = contract(g, VertexSet::from_mask(static_cast<std::size_t>(n), ((std::uint64_t{1} << n) - 1) & ~x));
            bool sep = oracle_mc(cx.g) && oracle_mc(cy.g);
            REQUIRE(is_separating_cut(g, c) == sep);
            REQUIRE(sep == by_m);
            if (tight) REQUIRE(sep);
        }
    }
}

TEST_CASE("bricks, braces and bicritical graphs") {
    CHECK(classify_brick_brace(k4()).kind == BrickBraceKind::brick);
    CHECK(classify_brick_brace(c6bar()).kind == BrickBraceKind::brick);
    CHECK(classify_brick_brace(petersen()).kind == BrickBraceKind::brick);
    MultiGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(classify_brick_brace(k33).kind == BrickBraceKind::brace);
    auto gl = classify_brick_brace(splice(k4(), 0, k33, 0));
    CHECK(gl.kind == BrickBraceKind::has_nontrivial_tight_cut);
    REQUIRE(gl.witness);
    CHECK(is_tight_cut(splice(k4(), 0, k33, 0), *gl.witness));
    CHECK(classify_brick_brace(gen_dumbbell(3, 2, 2, 1).g).kind == BrickBraceKind::not_matching_covered);
    CHECK(std::string(kind_name(BrickBraceKind::brace)) == "brace");

    CHECK(is_bicritical(k4()));
    CHECK(is_bicritical(petersen()));
    CHECK_FALSE(is_bicritical(k33));
    CHECK_THROWS_AS(is_bicritical(theta()), Error);
    // a 3-connected bicritical graph is a brick
    for (auto& name : {"k4", "c6bar", "r8", "r10", "n10", "petersen", "quartic8"}) {
        MultiGraph g = oracle::fixture(name);
        if (is_bicritical(g) && vertex_connectivity(g, 3) >= 3) REQUIRE(classify_brick_brace(g).kind == BrickBraceKind::brick);
    }
}

TEST_CASE("near-bipartite witnesses") {
    CHECK(near_bipartite_witness(k4()));
    CHECK(near_bipartite_witness(c6bar()));
    CHECK_FALSE(near_bipartite_witness(petersen()));
    MultiGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_THROWS_AS(near_bipartite_witness(k33), Error);
    for (auto& name : {"k4", "c6bar", "r8", "r10", "n10", "s1", "staircase1_10_t2"}) {
        CAPTURE(name);
        MultiGraph g = oracle::fixture(name);
        auto w = near_bipartite_witness(g);
        if (!w) continue;
        REQUIRE(w->removed.size() == 2);
        auto h = delete_edges(g, w->removed).g;
        REQUIRE(is_bipartite(h));
        REQUIRE(oracle_mc(h));
        REQUIRE(w->lovasz_ok);
    }
    REQUIRE(near_bipartite_witness(r8()));
}
