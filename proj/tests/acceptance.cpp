// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "matchcov/classifier.hpp"
#include "oracles.hpp"

using namespace mc;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 8) failures.push_back(what);
        if (!ok && failures.size() == 8) failures.push_back("...");
    }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) c.failures.push_back("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s));
    bool ok = c.failures.empty();
    if (!ok) ++g_failed;
    std::printf("%s  criterion %2d  %-62s %8.3f s\n", ok ? "PASS" : "FAIL", id, title.c_str(), s);
    for (auto& f : c.failures) std::printf("        %s\n", f.c_str());
    std::fflush(stdout);
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (auto& e : std::filesystem::directory_iterator(FIXTURE_DIR))
        if (e.path().extension() == ".el") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::string name_of(const MultiGraph& g) { return "graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()); }

std::vector<MultiGraph> g_corpus;  // exhaustive n <= 10 cubic, n <= 8 quartic, family members n <= 14

const std::vector<MultiGraph>& corpus() {
    if (g_corpus.empty()) {
        g_corpus = exhaustive_small_corpus(10, 3);
        for (auto& g : exhaustive_small_corpus(8, 4)) g_corpus.push_back(g);
        std::set<std::string> seen;
        for (auto& g : g_corpus) seen.insert(canonical_form(g));
        for (auto& g : family_corpus(14, 3))
            if (seen.insert(canonical_form(g)).second) g_corpus.push_back(g);
    }
    return g_corpus;
}

void run_verify(Check& c, Theorem t, const std::vector<MultiGraph>& graphs) {
    VerifyOptions opt;
    auto rep = verify(t, graphs, opt);
    c.expect(rep.violations.empty(), std::string(theorem_id(t)) + ": " + std::to_string(rep.violations.size()) +
                                          " violations" + (rep.violations.empty() ? "" : ", first: " + rep.violations[0].message));
    c.expect(rep.applied > 0, std::string(theorem_id(t)) + ": no graph met the hypothesis");
}

bool three_ec_rgraph(const MultiGraph& g) {
    auto r = certify_rgraph(g);
    return r.ok && r.cert.is_3ec;
}

// half-order class edges of a matching covered graph
std::vector<EdgeId> half_edges(const MultiGraph& g) {
    auto da = analyze(g);
    std::vector<EdgeId> out;
    for (auto& c : da.classes)
        if (static_cast<int>(c.size()) * 2 == g.order()) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

LTrace random_trace(std::mt19937& rng, const std::vector<LTrace>& leaves, int count) {
    std::vector<LTrace> pool;
    for (int i = 0; i < count; ++i) pool.push_back(leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)]);
    while (pool.size() > 1) {
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
        LTrace a = pool[i];
        pool.erase(pool.begin() + static_cast<long>(i));
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
        LTrace b = pool[j];
        auto ea = half_edges(gen_family_L(a)), eb = half_edges(gen_family_L(b));
        EdgeId x = ea[std::uniform_int_distribution<std::size_t>(0, ea.size() - 1)(rng)];
        EdgeId y = eb[std::uniform_int_distribution<std::size_t>(0, eb.size() - 1)(rng)];
        pool[j] = LTrace::join(a, x, b, y, rng() % 2);
    }
    return pool[0];
}

}  // namespace

int main() {
    std::printf("acceptance run, fixtures from %s\n", FIXTURE_DIR);

    criterion(1, "solitary patterns of named graphs; R10 classes", 1.0, [](Check& c) {
        auto P = [](const MultiGraph& g) { return solitary_pattern(g); };
        c.expect(P(theta()) == SolitaryPattern{1, 1, 1}, "theta");
        c.expect(P(k4()) == SolitaryPattern{2, 2, 2}, "K4");
        c.expect(P(c6bar()) == SolitaryPattern{2, 2, 2}, "C6bar");
        c.expect(P(r8()) == SolitaryPattern{2, 2, 1}, "R8");
        c.expect(P(n10()) == SolitaryPattern{2, 1, 1}, "N10");
        c.expect(P(petersen()).empty(), "Petersen");
        for (MultiGraph g : {theta(), k4(), c6bar(), r8(), n10(), petersen()})
            c.expect(P(g) == oracle::pattern(g), "oracle pattern " + name_of(g));
        MultiGraph g = r10();
        auto E = [&](int u, int v) { return oracle::edge_between(g, u, v); };
        auto da = analyze(g);
        c.expect(da.classes.size() == 13, "R10 has " + std::to_string(da.classes.size()) + " classes");
        auto cls = [&](EdgeId e) { return da.class_of[e]; };
        auto pair = [&](int a, int b, int x, int y) {
            auto v = da.classes[cls(E(a, b))];
            std::sort(v.begin(), v.end());
            std::vector<EdgeId> w{E(a, b), E(x, y)};
            std::sort(w.begin(), w.end());
            return v == w;
        };
        c.expect(pair(1, 2, 0, 9), "doubleton {12,09}");
        c.expect(pair(1, 3, 0, 8), "doubleton {13,08}");
        std::set<int> minimal(da.minimal.begin(), da.minimal.end());
        c.expect(minimal == std::set<int>{cls(E(1, 2)), cls(E(1, 3)), cls(E(4, 5)), cls(E(6, 7))}, "R10 minimal classes");
    });

    criterion(2, "R10 dependence spot-check and Hasse diagram", 1.0, [](Check& c) {
        MultiGraph g = r10();
        auto E = [&](int u, int v) { return oracle::edge_between(g, u, v); };
        auto ms = enumerate_pms(g);
        c.expect(depends(ms, E(4, 5), E(2, 3)), "depends(45,23)");
        c.expect(!depends(ms, E(2, 3), E(4, 5)), "not depends(23,45)");
        auto ref = oracle::pms(g);
        c.expect(oracle::depends(ref, E(4, 5), E(2, 3)) && !oracle::depends(ref, E(2, 3), E(4, 5)), "oracle agrees");
        auto da = analyze(g, ms);
        auto cls = [&](int u, int v) { return da.class_of[E(u, v)]; };
        std::set<std::pair<int, int>> hasse(da.poset_edges.begin(), da.poset_edges.end());
        std::set<std::pair<int, int>> expect{{cls(1, 2), cls(3, 4)}, {cls(1, 2), cls(5, 6)}, {cls(1, 2), cls(7, 8)},
                                             {cls(1, 3), cls(2, 5)}, {cls(1, 3), cls(4, 7)}, {cls(1, 3), cls(6, 9)},
                                             {cls(4, 5), cls(2, 3)}, {cls(2, 3), cls(0, 1)}, {cls(6, 7), cls(8, 9)},
                                             {cls(8, 9), cls(0, 1)}};
        c.expect(hasse == expect, "Hasse arrow set");
    });

    criterion(3, "2-cut decomposition is unique under 5 shuffles", 10.0, [](Check& c) {
        int used = 0;
        std::mt19937 rng(13);
        for (auto& name : fixture_names()) {
            MultiGraph g = oracle::fixture(name);
            if (g.order() > 16 || find_even_2cuts(g).empty()) continue;
            auto rg = certify_rgraph(g);
            if (rg.ok && rg.cert.is_3ec) continue;
            ++used;
            auto t = decompose_2cuts(g);
            auto base = leaf_multiset(t);
            for (auto& leaf : t.leaves()) c.expect(find_even_2cuts(leaf).empty(), name + ": leaf with an even 2-cut");
            for (int s = 0; s < 5; ++s) c.expect(leaf_multiset(decompose_2cuts(g, &rng)) == base, name + ": shuffle differs");
        }
        c.expect(used >= 10, "only " + std::to_string(used) + " gluing fixtures");
    });

    criterion(4, "solitary bounds over the corpus", 300.0, [](Check& c) {
        const auto& cs = corpus();
        std::size_t applied = 0;
        for (auto& g : cs) {
            if (g.order() < 4 || !three_ec_rgraph(g)) continue;
            ++applied;
            int r = g.regular_degree();
            auto ms = enumerate_pms(g);
            auto da = analyze(g, ms);
            std::size_t edges = solitary_edges(ms).size();
            c.expect(edges <= static_cast<std::size_t>(r == 3 ? 6 : 4), name_of(g) + ": too many solitary edges");
            c.expect(da.solitary.size() <= static_cast<std::size_t>(r == 3 ? 3 : 2), name_of(g) + ": too many solitary classes");
            for (int s : da.solitary) c.expect(da.classes[s].size() <= 2, name_of(g) + ": large solitary class");
            c.expect(pattern_allowed(da.pattern, r), name_of(g) + ": pattern " + pattern_string(da.pattern));
        }
        c.expect(applied > 100, "only " + std::to_string(applied) + " graphs met the hypothesis");
        std::printf("        corpus %zu graphs, %zu 3-edge-connected r-graphs of order >= 4\n", cs.size(), applied);
    });

    criterion(5, "more than n/2 solitary edges only in the exceptional families", 300.0, [](Check& c) {
        int exceed = 0;
        for (auto& g : corpus()) {
            if (!is_rgraph(g) || g.order() > kCanonicalLimit) continue;
            auto fams = recognize(g);
            bool member = in_multiplied_family(fams, Family::theta_i, 1) || in_multiplied_family(fams, Family::k4_i, 1) ||
                          in_multiplied_family(fams, Family::c6bar_i, 1) || has_family(fams, Family::r8);
            bool over = 2 * solitary_edges(g).size() > static_cast<std::size_t>(g.order());
            exceed += over;
            c.expect(over == member, name_of(g) + (over ? ": exceeds outside the families" : ": member within n/2"));
        }
        c.expect(exceed > 0, "no graph exceeded n/2");
    });

    criterion(6, "staircase, 3-staircase and S patterns; rows recognized", 300.0, [](Check& c) {
        for (int n = 10; n <= 14; n += 2)
            for (int t = 1; t <= 3; ++t) c.expect(solitary_pattern(gen_staircase1(n, t)) == SolitaryPattern{2, 2},
                                                  "staircase n=" + std::to_string(n) + " t=" + std::to_string(t));
        for (int n = 12; n <= 14; n += 2)
            for (auto [a, b] : staircase3_params(n))
                for (int t = 1; t <= 3; ++t)
                    c.expect(solitary_pattern(gen_staircase3(a, b, t)) == SolitaryPattern{2, 1},
                             "3-staircase a=" + std::to_string(a) + " b=" + std::to_string(b) + " t=" + std::to_string(t));
        c.expect(oracle::pattern(theta()) == std::vector<int>{1, 1, 1}, "theta");
        for (int i = 1; i <= 5; ++i) c.expect(oracle::pattern(gen_family_S(i)) == std::vector<int>{1, 1, 1}, "S" + std::to_string(i));
        std::vector<MultiGraph> ex = exhaustive_small_corpus(10, 3);
        for (auto& g : exhaustive_small_corpus(8, 4)) ex.push_back(g);
        std::size_t rows = 0;
        for (auto& g : ex) {
            if (!three_ec_rgraph(g)) continue;
            auto p = solitary_pattern(g);
            if (!table_row(p, g.regular_degree())) continue;
            ++rows;
            c.expect(row_matches(p, g.regular_degree(), recognize(g)), name_of(g) + ": pattern " + pattern_string(p) + " not recognized");
        }
        c.expect(rows > 0, "no corpus graph in a table row");
        run_verify(c, Theorem::two_doubletons, ex);
        run_verify(c, Theorem::doubleton_singleton, ex);
        run_verify(c, Theorem::three_singletons, ex);
    });

    criterion(7, "3-staircase counts 1,1,2,2,3", 0, [](Check& c) {
        std::vector<std::size_t> want{1, 1, 2, 2, 3};
        for (int i = 0; i < 5; ++i) {
            int n = 8 + 2 * i;
            std::set<std::string> forms;
            for (auto [a, b] : staircase3_params(n)) forms.insert(canonical_form(gen_staircase3(a, b, 1)));
            c.expect(forms.size() == want[static_cast<std::size_t>(i)], "order " + std::to_string(n) + ": " + std::to_string(forms.size()));
            c.expect(static_cast<int>(forms.size()) == (n - 6 + 3) / 4, "ceiling formula at " + std::to_string(n));
        }
    });

    criterion(8, "solitary distance theorems; pattern (2) exception realized", 300.0, [](Check& c) {
        std::vector<MultiGraph> cs = corpus();
        for (auto& name : fixture_names()) cs.push_back(oracle::fixture(name));
        for (auto& g : cs) {
            if (!three_ec_rgraph(g) || g.order() > kEnumerationLimit) continue;
            auto ms = enumerate_pms(g);
            auto da = analyze(g, ms);
            auto sol = solitary_edges(ms);
            bool cubic3 = g.regular_degree() == 3 && is_k_connected(g, 3);
            for (std::size_t i = 0; i < sol.size(); ++i)
                for (std::size_t j = i + 1; j < sol.size(); ++j) {
                    EdgeId e = sol[i], f = sol[j];
                    int d = edge_distance(g, e, f);
                    if (cubic3 && mutually_exclusive(ms, e, f)) c.expect(d <= 1, name_of(g) + ": exclusive pair far apart");
                    bool single = da.classes[da.class_of[e]].size() == 1 || da.classes[da.class_of[f]].size() == 1;
                    if (single && g.order() > 2) c.expect(d == 1, name_of(g) + ": singleton pair at distance " + std::to_string(d));
                    if (da.pattern != SolitaryPattern{2}) c.expect(d <= 3, name_of(g) + ": solitary pair at distance " + std::to_string(d));
                }
        }
        MultiGraph d = oracle::fixture("pattern2_cubic16");
        auto sol = solitary_edges(d);
        c.expect(solitary_pattern(d) == SolitaryPattern{2}, "pattern (2) member");
        c.expect(sol.size() == 2 && edge_distance(d, sol[0], sol[1]) > 3, "pattern (2) member has solitary edges beyond distance 3");
        c.expect(sol.size() == 2 && oracle::edge_distance(d, sol[0], sol[1]) == edge_distance(d, sol[0], sol[1]), "distance oracle");
    });

    criterion(9, "family D members and recognizer", 300.0, [](Check& c) {
        std::vector<DTrace> traces;
        for (int n = 12; n <= 18; n += 2)
            for (auto [a, b] : staircase3_params(n)) {
                MultiGraph base = gen_staircase3(a, b, 1);
                for (Vertex v : family_D_eligible(base, true)) {
                    DTrace t;
                    t.a = a;
                    t.b = b;
                    t.steps = {v};
                    traces.push_back(t);
                    MultiGraph one = gen_family_D(t);
                    if (one.order() + 2 > 20) continue;
                    auto next = family_D_eligible(one, false);
                    for (std::size_t k = 0; k < next.size(); k += 3) {
                        DTrace u = t;
                        u.steps.push_back(next[k]);
                        traces.push_back(u);
                    }
                }
            }
        std::size_t tried = 0;
        for (auto& t : traces) {
            MultiGraph g = gen_family_D(t);
            if (g.order() > 20) continue;
            ++tried;
            c.expect(g.regular_degree() == 3 && is_k_connected(g, 3), "trace output not 3-connected cubic");
            c.expect(solitary_pattern(g) == SolitaryPattern{2}, "trace output pattern " + pattern_string(solitary_pattern(g)));
            c.expect(is_family_D(g), "recognizer rejects a generated member");
        }
        c.expect(tried >= 20, "only " + std::to_string(tried) + " traces");
        std::printf("        %zu family D traces\n", tried);
        std::size_t seen = 0;
        for (auto& g : corpus()) {
            if (g.regular_degree() != 3 || g.order() < 4 || !is_k_connected(g, 3)) continue;
            if (solitary_pattern(g) != SolitaryPattern{2}) continue;
            ++seen;
            c.expect(is_family_D(g), name_of(g) + ": pattern (2) rejected by the recognizer");
        }
        c.expect(seen > 0, "no pattern (2) graph in the corpus");
    });

    criterion(10, "family L outputs have a half-order class; reconstruction", 300.0, [](Check& c) {
        std::mt19937 rng(5);
        std::vector<LTrace> leaves3{LTrace::leaf_c2(3), LTrace::leaf_k4({1, 1, 1, 1, 1, 1}), LTrace::leaf_c2(2),
                                    LTrace::leaf_k4({2, 2, 1, 1, 1, 1})};
        std::size_t outputs = 0;
        for (int i = 0; i < 40; ++i) {
            LTrace t = random_trace(rng, leaves3, 1 + i % 4);
            MultiGraph g = gen_family_L(t);
            ++outputs;
            c.expect(2 * analyze(g).epsilon == g.order(), "L trace " + t.str() + ": epsilon below n/2");
        }
        for (int r = 3; r <= 5; ++r) {
            std::vector<LTrace> lr{LTrace::leaf_c2(r)};
            for (int a = 1; a + 2 <= r; ++a) lr.push_back(LTrace::leaf_k4({a, a, r - 1 - a, r - 1 - a, 1, 1}));
            for (int i = 0; i < 15; ++i) {
                LTrace t = random_trace(rng, lr, 1 + i % 4);
                MultiGraph g = gen_family_L_r(r, t);
                ++outputs;
                c.expect(g.regular_degree() == r && is_rgraph(g), "L^r output is not an r-graph");
                c.expect(2 * analyze(g).epsilon == g.order(), "L^r trace " + t.str() + ": epsilon below n/2");
            }
        }
        std::printf("        %zu L and L^r outputs\n", outputs);
        std::size_t rebuilt = 0;
        for (auto& g : corpus()) {
            if (g.order() > kCanonicalLimit || !is_matching_covered(g).covered) continue;
            if (2 * analyze(g).epsilon != g.order()) continue;
            if (g.order() == 2 && g.size() == 1) continue;
            auto t = reconstruct_L_trace(g);
            c.expect(t.has_value(), name_of(g) + ": no L trace");
            if (t) {
                c.expect(isomorphic(gen_family_L(*t), g), name_of(g) + ": trace " + t->str() + " does not regenerate");
                ++rebuilt;
            }
        }
        c.expect(rebuilt > 0, "nothing to reconstruct");
    });

    criterion(11, "oracle cross-checks: deletion, parity, Kotzig", 120.0, [](Check& c) {
        std::mt19937 rng(17);
        for (auto& name : fixture_names()) {
            MultiGraph g = oracle::fixture(name);
            int n = g.order();
            auto ref = oracle::pms(g);
            auto cnt = oracle::pm_counts(g, ref);
            if (n <= 12)
                for (auto& e : g.edges()) {
                    MultiGraph h = oracle::delete_pair(g, e.u, e.v);
                    c.expect((oracle::pms(h).size() == 1) == (cnt[e.id] == 1), name + ": deletion test at edge " + std::to_string(e.id));
                }
            // parity on a cut sample
            std::vector<std::uint64_t> shores;
            if (n <= 10)
                for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) shores.push_back(s);
            else
                for (int k = 0; k < 64; ++k) shores.push_back(rng() & ((std::uint64_t{1} << n) - 1));
            for (auto s : shores)
                for (auto& m : ref) {
                    int meet = 0;
                    for (EdgeId e : m) meet += ((s >> g.edge(e).u) ^ (s >> g.edge(e).v)) & 1;
                    c.expect((meet - __builtin_popcountll(s)) % 2 == 0, name + ": parity");
                }
            // uniquely matchable graphs derived from solitary edges
            for (auto& e : g.edges()) {
                if (cnt[e.id] != 1 || n < 4) continue;
                MultiGraph h = oracle::delete_pair(g, e.u, e.v);
                auto hm = oracle::pms(h);
                if (hm.size() != 1) continue;
                EdgeId k = kotzig_1cut(h);
                std::vector<char> dead(static_cast<std::size_t>(h.size()), 0);
                dead[k] = 1;
                c.expect(oracle::contains(hm[0], k), name + ": Kotzig edge outside the matching");
                c.expect(h.order() == 2 || !oracle::connected_without(h, 0, dead), name + ": Kotzig edge is not a bridge");
            }
        }
    });

    criterion(12, "edge colouring: Petersen refused, solitary graphs, uniqueness", 0, [](Check& c) {
        c.expect(!r_edge_coloring(petersen(), 3), "Petersen coloured");
        for (auto& name : fixture_names()) {
            MultiGraph g = oracle::fixture(name);
            if (!is_rgraph(g) || g.order() > kEnumerationLimit) continue;
            int r = g.regular_degree();
            auto da = analyze(g);
            if (da.solitary.empty()) continue;
            auto col = r_edge_coloring(g, r);
            c.expect(col.has_value(), name + ": not coloured");
            if (col)
                for (int v = 0; v < g.order(); ++v) {
                    std::set<int> seen;
                    for (EdgeId e : g.incident(v)) c.expect(seen.insert(col->color_of[e]).second, name + ": improper");
                }
            if (g.order() <= 10 && static_cast<int>(da.solitary.size()) >= r - 1)
                c.expect(oracle::colorings_up_to_permutation(g, r) == 1, name + ": colouring not unique");
        }
    });

    std::printf("%s: %d of 12 criteria failed\n", g_failed ? "FAILED" : "OK", g_failed);
    return g_failed ? 1 : 0;
}
