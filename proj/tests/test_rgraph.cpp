#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "matchcov/classifier.hpp"

using namespace mc;

namespace {

bool oracle_rgraph(const MultiGraph& g, int r) {
    int n = g.order();
    if (n % 2) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != r) return false;
    return oracle::min_odd_cut(g) >= r;
}

std::vector<std::string> fixtures() {
    return {"theta", "k4", "c6bar", "c4_doubled", "r8", "r10", "n10", "petersen", "s1", "quartic6", "quartic8",
            "quartic10", "pattern2_quartic8", "glue_k4_k4", "glue_theta_k4", "glue_theta_theta", "glue_quartic_k4",
            "glue_quartic_c2", "glue_chain_k4", "glue_r8_k4", "glue_prism_prism", "glue_k4_prism"};
}

bool proper(const MultiGraph& g, const EdgeColoring& c) {
    for (int v = 0; v < g.order(); ++v) {
        std::set<int> seen;
        for (EdgeId e : g.incident(v))
            if (!seen.insert(c.color_of[e]).second) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("certificates on fixtures agree with the odd-cut oracle") {
    for (auto& name : fixtures()) {
        CAPTURE(name);
        MultiGraph g = oracle::fixture(name);
        int r = g.regular_degree();
        auto res = certify_rgraph(g);
        REQUIRE(res.ok == oracle_rgraph(g, r));
        if (!res.ok) continue;
        REQUIRE(res.cert.r == r);
        REQUIRE(res.cert.regular);
        REQUIRE(res.cert.min_odd_cut == oracle::min_odd_cut(g));
        bool ec3 = g.order() == 2 ? g.multiplicity(0, 1) >= 3 : oracle::edge_connectivity(g) >= 3;
        REQUIRE(res.cert.is_3ec == ec3);
    }
    CHECK(certify_rgraph(petersen()).cert.is_3ec);
    CHECK_FALSE(certify_rgraph(oracle::fixture("glue_k4_k4")).cert.is_3ec);
}

TEST_CASE("refusals carry a witness") {
    // two K4 with a subdivided edge, subdivision vertices joined by a bridge
    MultiGraph br(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {5, 6}, {5, 7}, {5, 8},
                       {6, 7}, {6, 9}, {7, 8}, {8, 9}, {4, 9}});
    REQUIRE(br.regular_degree() == 3);
    auto res = certify_rgraph(br);
    REQUIRE_FALSE(res.ok);
    REQUIRE(res.violating_shore);
    CHECK(res.violating_shore->count() % 2 == 1);
    CHECK(cut_of(br, *res.violating_shore).size() < 3);
    auto d = certify_rgraph(gen_dumbbell(3, 2, 2, 1).g);
    CHECK_FALSE(d.ok);
    CHECK(d.degree_anomaly);

    MultiGraph irregular(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto ir = certify_rgraph(irregular);
    REQUIRE_FALSE(ir.ok);
    REQUIRE(ir.degree_anomaly);
    int da = irregular.degree(*ir.degree_anomaly);
    CHECK(std::any_of(irregular.edges().begin(), irregular.edges().end(),
                      [&](auto& e) { return irregular.degree(e.u) != da || irregular.degree(e.v) != da; }));
    CHECK_FALSE(certify_rgraph(MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}})).ok);
    CHECK_FALSE(certify_rgraph(MultiGraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}})).ok);
}

TEST_CASE("minimum odd cut, scan and Gomory-Hu") {
    std::mt19937 rng(21);
    for (int t = 0; t < 40; ++t) {
        int n = 4 + 2 * (t % 4);
        MultiGraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
        for (int i = 0; i < n; ++i) {
            int u = std::uniform_int_distribution<int>(0, n - 1)(rng), v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (u != v) g.add_edge(u, v);
        }
        int ref = oracle::min_odd_cut(g);
        auto a = min_odd_cut(g), b = min_odd_cut_gomory_hu(g);
        REQUIRE(a.value == ref);
        REQUIRE(b.value == ref);
        REQUIRE(a.shore.count() % 2 == 1);
        REQUIRE(b.shore.count() % 2 == 1);
        REQUIRE(cut_of(g, b.shore).size() == ref);
    }
    for (auto& name : {"petersen", "r10", "glue_chain_k4"}) {
        MultiGraph g = oracle::fixture(name);
        REQUIRE(min_odd_cut_gomory_hu(g).value == oracle::min_odd_cut(g));
    }
}

TEST_CASE("edge colourings") {
    auto k = r_edge_coloring(k4(), 3);
    REQUIRE(k);
    CHECK(proper(k4(), *k));
    CHECK(count_edge_colorings(k4(), 3, 10) == 1);
    CHECK_FALSE(r_edge_coloring(petersen(), 3));
    CHECK(count_edge_colorings(petersen(), 3, 10) == 0);

    MultiGraph t4 = multiply_matching(theta(), {0}, 2);
    CHECK(certify_rgraph(t4).cert.r == 4);
    CHECK(r_edge_coloring(t4, 4));
    CHECK(count_edge_colorings(t4, 4, 10) == 1);

    for (auto& name : fixtures()) {
        MultiGraph g = oracle::fixture(name);
        int r = g.regular_degree();
        if (r < 2 || g.size() > 20) continue;
        CAPTURE(name);
        long ref = oracle::colorings_up_to_permutation(g, r);
        REQUIRE(count_edge_colorings(g, r, 1000) == std::min(ref, 1000L));
        auto c = r_edge_coloring(g, r);
        REQUIRE(c.has_value() == (ref > 0));
        if (c) {
            REQUIRE(proper(g, *c));
            REQUIRE(static_cast<int>(c->classes().size()) == r);
            for (auto& cls : c->classes()) REQUIRE(is_perfect_matching(g, cls));
        }
    }
    CHECK(count_edge_colorings(c6bar(), 3, 1) == 1);  // stops at the limit
}

TEST_CASE("multiplying a matching") {
    MultiGraph p = petersen();
    auto ms = enumerate_pms(p);
    CHECK(isomorphic(multiply_matching(k4(), {0, 1}, 1), k4()));
    for (auto& m : ms.matchings) {
        MultiGraph h = multiply_matching(p, m, 2);
        REQUIRE(h.size() == p.size() + 5);
        for (EdgeId e = p.size(); e < h.size(); ++e) {
            auto& orig = p.edge(m[static_cast<std::size_t>(e - p.size())]);
            REQUIRE(h.edge(e).u == orig.u);
            REQUIRE(h.edge(e).v == orig.v);
        }
        auto cert = certify_rgraph(h);
        REQUIRE(cert.ok);
        REQUIRE(cert.cert.r == 4);
    }
    CHECK_THROWS_AS(multiply_matching(p, {0}, 2), Error);
    CHECK_THROWS_AS(multiply_matching(k4(), {0, 1}, 0), Error);
}

TEST_CASE("rainbow triangles") {
    CHECK(rainbow_triangles(k4(), 3).size() == 4);
    CHECK(rainbow_triangles(petersen(), 3).empty());
    CHECK(rainbow_triangles(c6bar(), 3).size() == 2);
    MultiGraph q = oracle::fixture("quartic6");
    auto mm = oracle::mult_matrix(q);
    for (auto& t : rainbow_triangles(q, 4)) REQUIRE(mm[t[0]][t[1]] + mm[t[0]][t[2]] + mm[t[1]][t[2]] == 4);
    int brute = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                brute += mm[a][b] && mm[a][c] && mm[b][c] && mm[a][b] + mm[a][c] + mm[b][c] == 4;
    CHECK(static_cast<int>(rainbow_triangles(q, 4).size()) == brute);
}

TEST_CASE("cubic cores") {
    MultiGraph g = k4();
    auto col = *r_edge_coloring(g, 3);
    auto core = cubic_core_for_pair(g, col, 0, -1);
    CHECK(core.h.g.regular_degree() == 3);

    for (auto& name : {"quartic6", "quartic8", "quartic10", "pattern2_quartic8"}) {
        CAPTURE(name);
        MultiGraph q = oracle::fixture(name);
        auto c = r_edge_coloring(q, 4);
        if (!c) continue;
        auto ms = enumerate_pms(q);
        auto sol = solitary_edges(ms);
        if (sol.empty()) continue;
        EdgeId e1 = sol[0];
        if (certify_rgraph(q).cert.is_3ec) {
            auto k = cubic_core_for_pair(q, *c, e1, -1);
            REQUIRE(k.h.g.regular_degree() == 3);
            REQUIRE(is_k_connected(k.h.g, 3));
            REQUIRE(std::count(k.colors.begin(), k.colors.end(), c->color_of[e1]) == 1);
        }
        for (EdgeId e2 : sol) {
            if (ms.incidence[e1].intersects(ms.incidence[e2]) || c->color_of[e1] == c->color_of[e2]) continue;
            auto k = cubic_core_for_pair(q, *c, e1, e2);
            REQUIRE(k.colors.size() == 3);
            REQUIRE(k.h.g.regular_degree() == 3);
            // a solitary edge of the r-graph stays solitary in the core
            auto kms = enumerate_pms(k.h.g);
            for (EdgeId i = 0; i < k.h.g.size(); ++i)
                if (k.h.edge_origin[i] == e1) REQUIRE(kms.popcount(i) == 1);
        }
    }
    CHECK_THROWS_AS(cubic_core_for_pair(petersen(), EdgeColoring{}, 0, -1), Error);
}

TEST_CASE("simple 3-edge-connected r-graphs with r >= 4 are double covered") {
    for (auto& name : fixtures()) {
        MultiGraph g = oracle::fixture(name);
        int r = g.regular_degree();
        if (r < 4 || !certify_rgraph(g).ok || !certify_rgraph(g).cert.is_3ec) continue;
        bool simple = true;
        for (auto& e : g.edges()) simple = simple && g.multiplicity(e.u, e.v) == 1;
        if (!simple) continue;
        CAPTURE(name);
        auto cnt = oracle::pm_counts(g, oracle::pms(g));
        REQUIRE(std::all_of(cnt.begin(), cnt.end(), [](int c) { return c >= 2; }));
    }
    MultiGraph k6(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6.add_edge(u, v);
    CHECK(is_matching_double_covered(multiply_matching(k6, std::vector<EdgeId>{oracle::edge_between(k6, 0, 1), oracle::edge_between(k6, 2, 3), oracle::edge_between(k6, 4, 5)}, 1)));
}
