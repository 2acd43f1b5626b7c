#include "matchcov/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace mc {

// ---- pattern table

std::optional<std::string> table_row(const SolitaryPattern& p, int r) {
    using P = SolitaryPattern;
    if (p == P{2, 2, 2}) return "(2,2,2): K4 or C6bar";
    if (p == P{2, 2, 1}) return "(2,2,1): R8";
    if (p == P{2, 2}) return "(2,2): K4 multiplied at one matching, or staircase of thickness r-2";
    if (p == P{2, 1, 1}) return "(2,1,1): N10";
    if (p == P{2, 1}) return "(2,1): 3-staircase of thickness r-2";
    if (p == P{1, 1, 1}) return "(1,1,1): theta or a member of S";
    if (p == P{2} && r == 3) return "(2): family D";
    return std::nullopt;
}

bool row_matches(const SolitaryPattern& p, int r, const std::vector<FamilyMatch>& fams) {
    using P = SolitaryPattern;
    auto staircase = [&](Family f) {
        return std::any_of(fams.begin(), fams.end(),
                           [&](const FamilyMatch& m) { return m.family == f && m.params.back() == r - 2; });
    };
    if (p == P{2, 2, 2}) return in_multiplied_family(fams, Family::k4_i, 0) || in_multiplied_family(fams, Family::c6bar_i, 0);
    if (p == P{2, 2, 1}) return has_family(fams, Family::r8);
    if (p == P{2, 2}) return in_multiplied_family(fams, Family::k4_i, 1) || staircase(Family::staircase1);
    if (p == P{2, 1, 1}) return has_family(fams, Family::n10);
    if (p == P{2, 1}) return staircase(Family::staircase3);
    if (p == P{1, 1, 1}) return has_family(fams, Family::family_S) || in_multiplied_family(fams, Family::theta_i, 0);
    if (p == P{2} && r == 3) return has_family(fams, Family::family_D);
    return true;
}

bool pattern_allowed(const SolitaryPattern& p, int r) {
    using P = SolitaryPattern;
    static const std::vector<P> cubic{{2, 2, 2}, {2, 2, 1}, {2, 1, 1}, {1, 1, 1}, {2, 2}, {2, 1}, {1, 1}, {2}, {1}, {}};
    static const std::vector<P> higher{{2, 2}, {2, 1}, {1, 1}, {2}, {1}, {}};
    const auto& list = r == 3 ? cubic : higher;
    return std::find(list.begin(), list.end(), p) != list.end();
}

// ---- counting across a 2-cut

std::vector<long> pm_counts_across_2cut(const MultiGraph& g, const Cut& c) {
    auto [a, b] = marked_components(g, c);
    auto msa = enumerate_pms(a.graph), msb = enumerate_pms(b.graph);
    const Bits& ma = msa.incidence[a.marker_edge];
    const Bits& mb = msb.incidence[b.marker_edge];
    long na = static_cast<long>(msa.count()), nb = static_cast<long>(msb.count());
    long ka = static_cast<long>(ma.count()), kb = static_cast<long>(mb.count());
    std::vector<long> out(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId e : c.edge_ids) out[e] = ka * kb;
    auto side = [&](const MarkedComponent& m, const MatchingSet& ms, const Bits& mk, long other_with, long other_without) {
        for (EdgeId i = 0; i < m.graph.size(); ++i) {
            if (i == m.marker_edge) continue;
            long with = static_cast<long>((ms.incidence[i] & mk).count());
            long without = static_cast<long>(ms.incidence[i].count()) - with;
            out[m.edge_origin[i]] = with * other_with + without * other_without;
        }
    };
    side(a, msa, ma, kb, nb - kb);
    side(b, msb, mb, ka, na - ka);
    return out;
}

bool single_class_cut_rule_holds(const MultiGraph& g, const Cut& c) {
    if (!is_rgraph(g) || c.size() != 2) return true;
    auto da = analyze(g);
    if (da.solitary.size() != 1) return true;
    const auto& d = da.classes[da.solitary[0]];
    auto in_d = [&](EdgeId e) { return std::find(d.begin(), d.end(), e) != d.end(); };
    auto [a, b] = marked_components(g, c);
    auto msa = enumerate_pms(a.graph), msb = enumerate_pms(b.graph);
    bool sa = msa.popcount(a.marker_edge) == 1, sb = msb.popcount(b.marker_edge) == 1;
    bool cut_in_d = in_d(c.edge_ids[0]) && in_d(c.edge_ids[1]);
    if (cut_in_d != (sa && sb)) return false;
    auto side = [&](const MarkedComponent& m, const MatchingSet& ms, bool other_solitary) {
        for (EdgeId i = 0; i < m.graph.size(); ++i) {
            if (i == m.marker_edge) continue;
            bool rule = ms.popcount(i) == 1 && depends(ms, i, m.marker_edge) && other_solitary;
            if (rule != in_d(m.edge_origin[i])) return false;
        }
        return true;
    };
    return side(a, msa, sb) && side(b, msb, sa);
}

// ---- classify

ClassificationReport classify(const MultiGraph& g) {
    if (!is_connected(g)) throw Error(Errc::DisconnectedGraph, "classification needs a connected graph");
    ClassificationReport rep;
    int n = g.order();
    rep.rgraph = certify_rgraph(g);
    rep.three_ec = n >= 2 && is_k_edge_connected(g, 3);
    if (n % 2) {
        rep.structure_note = "odd order: no perfect matching";
    } else {
        auto cov = is_matching_covered(g);
        rep.matching_covered = cov.covered;
        if (!cov.covered) rep.structure_note = "not matching covered: " + cov.reason;
    }
    if (rep.matching_covered) {
        if (n <= kEnumerationLimit) {
            rep.analysis = analyze(g);
            rep.pattern = rep.analysis->pattern;
            for (int c : rep.analysis->solitary)
                rep.solitary.insert(rep.solitary.end(), rep.analysis->classes[c].begin(), rep.analysis->classes[c].end());
            std::sort(rep.solitary.begin(), rep.solitary.end());
        } else {
            rep.structure_note = "order above the enumeration bound; dependence analysis skipped";
        }
    }
    if (n <= kCanonicalLimit) rep.family_matches = recognize(g);
    if (rep.rgraph.ok && rep.three_ec && rep.analysis) {
        rep.theorem_row = table_row(rep.pattern, rep.rgraph.cert.r);
        rep.row_consistent = row_matches(rep.pattern, rep.rgraph.cert.r, rep.family_matches);
    }
    if (!rep.three_ec && n >= 4 && n <= kEnumerationLimit && is_k_edge_connected(g, 2) && !find_even_2cuts(g).empty()) {
        rep.decomposition = decompose_2cuts(g);
        for (int id : rep.decomposition->leaf_ids()) {
            PieceReport p;
            p.node = id;
            p.graph = rep.decomposition->nodes[id].graph;
            p.rgraph = certify_rgraph(p.graph);
            if (is_matching_covered(p.graph).covered) p.pattern = solitary_pattern(p.graph);
            if (p.graph.order() <= kCanonicalLimit) p.families = recognize(p.graph);
            if (p.rgraph.ok && is_k_edge_connected(p.graph, 3)) p.row = table_row(p.pattern, p.rgraph.cert.r);
            rep.pieces.push_back(std::move(p));
        }
        if (rep.matching_covered) {
            const Cut& c = *rep.decomposition->nodes[0].cut;
            auto counts = pm_counts_across_2cut(g, c);
            std::vector<EdgeId> derived;
            for (EdgeId e = 0; e < g.size(); ++e)
                if (counts[e] == 1) derived.push_back(e);
            rep.derived_solitary = derived;
            rep.derived_agrees = !rep.analysis || derived == rep.solitary;
            if (rep.rgraph.ok) rep.derived_agrees = rep.derived_agrees && single_class_cut_rule_holds(g, c);
        }
    }
    return rep;
}

// ---- theorem ids

const std::vector<Theorem>& all_theorems() {
    static const std::vector<Theorem> all{
        Theorem::solitary_bound,       Theorem::half_order_exceptions,
        Theorem::decomposition_unique, Theorem::two_doubletons,
        Theorem::doubleton_singleton,  Theorem::three_singletons,
        Theorem::exclusive_distance,   Theorem::singleton_distance,
        Theorem::solitary_distance,    Theorem::pattern_two_family,
        Theorem::half_class,           Theorem::deletion_unique,
        Theorem::cut_parity,           Theorem::bridge_in_unique_matching,
        Theorem::solitary_colorable,   Theorem::unique_coloring,
        Theorem::solitary_class_count, Theorem::two_classes_connected,
        Theorem::solitary_brick,       Theorem::two_cut_in_solitary_matching,
        Theorem::rainbow_bound,        Theorem::cross_cut_dependence,
    };
    return all;
}

const char* theorem_id(Theorem t) {
    switch (t) {
        case Theorem::solitary_bound: return "solitary-bound";
        case Theorem::half_order_exceptions: return "half-order-exceptions";
        case Theorem::decomposition_unique: return "decomposition-unique";
        case Theorem::two_doubletons: return "two-doubletons";
        case Theorem::doubleton_singleton: return "doubleton-singleton";
        case Theorem::three_singletons: return "three-singletons";
        case Theorem::exclusive_distance: return "exclusive-distance";
        case Theorem::singleton_distance: return "singleton-distance";
        case Theorem::solitary_distance: return "solitary-distance";
        case Theorem::pattern_two_family: return "pattern-two-family";
        case Theorem::half_class: return "half-class";
        case Theorem::deletion_unique: return "deletion-unique";
        case Theorem::cut_parity: return "cut-parity";
        case Theorem::bridge_in_unique_matching: return "bridge-in-unique-matching";
        case Theorem::solitary_colorable: return "solitary-colorable";
        case Theorem::unique_coloring: return "unique-coloring";
        case Theorem::solitary_class_count: return "solitary-class-count";
        case Theorem::two_classes_connected: return "two-classes-connected";
        case Theorem::solitary_brick: return "solitary-brick";
        case Theorem::two_cut_in_solitary_matching: return "two-cut-in-solitary-matching";
        case Theorem::rainbow_bound: return "rainbow-bound";
        case Theorem::cross_cut_dependence: return "cross-cut-dependence";
    }
    return "?";
}

std::optional<Theorem> theorem_from_id(const std::string& id) {
    for (Theorem t : all_theorems())
        if (id == theorem_id(t)) return t;
    return std::nullopt;
}

// ---- per-graph checks

namespace {

using Verdict = std::optional<std::string>;  // violation message

std::string edge_str(const MultiGraph& g, EdgeId e) {
    return std::to_string(e) + "(" + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v) + ")";
}

struct Ctx {
    const MultiGraph& g;
    std::mt19937& rng;
    const VerifyOptions& opt;
    bool applied = false;

    Ctx(const MultiGraph& g_, std::mt19937& rng_, const VerifyOptions& opt_) : g(g_), rng(rng_), opt(opt_) {}

    std::optional<RGraphResult> rg_;
    std::optional<MatchingSet> ms_;
    std::optional<DependenceAnalysis> da_;

    const RGraphResult& rg() {
        if (!rg_) rg_ = certify_rgraph(g);
        return *rg_;
    }
    bool rgraph() { return rg().ok; }
    int r() { return rg().cert.r; }
    bool rgraph_3ec() { return rgraph() && rg().cert.is_3ec; }
    const MatchingSet& ms() {
        if (!ms_) ms_ = enumerate_pms(g);
        return *ms_;
    }
    const DependenceAnalysis& da() {
        if (!da_) da_ = analyze(g, ms());
        return *da_;
    }
    bool matching_covered() { return g.order() % 2 == 0 && is_matching_covered(g).covered; }
    std::vector<EdgeId> solitary() {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < g.size(); ++e)
            if (ms().popcount(e) == 1) out.push_back(e);
        return out;
    }
    int class_size(EdgeId e) { return static_cast<int>(da().classes[da().class_of[e]].size()); }
    int doubletons() {
        int k = 0;
        for (int c : da().solitary) k += da().classes[c].size() == 2;
        return k;
    }
    int singletons() {
        int k = 0;
        for (int c : da().solitary) k += da().classes[c].size() == 1;
        return k;
    }
};

Verdict check_solitary_bound(Ctx& x) {
    if (!x.rgraph_3ec() || x.g.order() < 4) return {};
    x.applied = true;
    int r = x.r();
    auto& da = x.da();
    std::size_t edges = x.solitary().size();
    std::size_t max_edges = r == 3 ? 6 : 4, max_classes = r == 3 ? 3 : 2;
    if (edges > max_edges) return std::to_string(edges) + " solitary edges";
    if (da.solitary.size() > max_classes) return std::to_string(da.solitary.size()) + " solitary classes";
    for (int c : da.solitary)
        if (da.classes[c].size() > 2) return "solitary class of size " + std::to_string(da.classes[c].size());
    if (!pattern_allowed(da.pattern, r)) return "pattern " + pattern_string(da.pattern) + " not in the list";
    return {};
}

Verdict check_half_order(Ctx& x) {
    if (!x.rgraph()) return {};
    x.applied = true;
    auto fams = recognize(x.g);
    bool member = in_multiplied_family(fams, Family::theta_i, 1) || in_multiplied_family(fams, Family::k4_i, 1) ||
                  in_multiplied_family(fams, Family::c6bar_i, 1) || has_family(fams, Family::r8);
    std::size_t k = x.solitary().size();
    bool exceeds = 2 * k > static_cast<std::size_t>(x.g.order());
    if (exceeds != member)
        return std::to_string(k) + " solitary edges at order " + std::to_string(x.g.order()) +
               (member ? " in an exceptional family" : " outside the exceptional families");
    return {};
}

Verdict check_decomposition(Ctx& x) {
    if (x.g.order() < 4 || !x.matching_covered() || find_even_2cuts(x.g).empty()) return {};
    x.applied = true;
    auto t = decompose_2cuts(x.g);
    for (auto& leaf : t.leaves())
        if (!find_even_2cuts(leaf).empty()) return "a leaf still has an even 2-cut";
    auto base = leaf_multiset(t);
    for (int i = 0; i < x.opt.shuffles; ++i) {
        auto other = leaf_multiset(decompose_2cuts(x.g, &x.rng));
        if (other != base) return "shuffled run " + std::to_string(i) + " produced a different leaf list";
    }
    return {};
}

Verdict check_two_doubletons(Ctx& x) {
    if (!x.rgraph_3ec()) return {};
    x.applied = true;
    auto fams = recognize(x.g);
    int r = x.r();
    bool member = in_multiplied_family(fams, Family::k4_i, 1) ||
                  std::any_of(fams.begin(), fams.end(), [&](const FamilyMatch& m) {
                      return m.family == Family::staircase1 && m.params[1] == r - 2;
                  });
    bool two = x.doubletons() >= 2;
    if (two != member) return two ? "two doubletons but not a recognized member" : "member without two doubletons";
    return {};
}

Verdict check_doubleton_singleton(Ctx& x) {
    if (!x.rgraph_3ec()) return {};
    x.applied = true;
    auto fams = recognize(x.g);
    int r = x.r();
    bool member = std::any_of(fams.begin(), fams.end(), [&](const FamilyMatch& m) {
        return m.family == Family::staircase3 && m.params[2] == r - 2;
    });
    bool has = x.doubletons() >= 1 && x.singletons() >= 1;
    if (has != member) return has ? "doubleton and singleton but not a 3-staircase" : "3-staircase lacking the classes";
    return {};
}

Verdict check_three_singletons(Ctx& x) {
    if (!x.rgraph_3ec()) return {};
    x.applied = true;
    auto fams = recognize(x.g);
    bool member = has_family(fams, Family::family_S) || in_multiplied_family(fams, Family::theta_i, 0);
    bool has = x.da().pattern == SolitaryPattern{1, 1, 1};
    if (has != member) return has ? "pattern (1,1,1) outside S and theta" : "member without pattern (1,1,1)";
    return {};
}

template <class Pred>
Verdict pairwise_distance(Ctx& x, Pred bad) {
    auto sol = x.solitary();
    for (std::size_t i = 0; i < sol.size(); ++i)
        for (std::size_t j = i + 1; j < sol.size(); ++j)
            if (auto msg = bad(sol[i], sol[j])) return msg;
    return {};
}

Verdict check_exclusive_distance(Ctx& x) {
    if (!x.rgraph_3ec()) return {};
    x.applied = true;
    return pairwise_distance(x, [&](EdgeId e, EdgeId f) -> Verdict {
        if (!mutually_exclusive(x.ms(), e, f)) return {};
        int d = edge_distance(x.g, e, f);
        if (d > 1) return "exclusive solitary edges " + edge_str(x.g, e) + ", " + edge_str(x.g, f) + " at distance " + std::to_string(d);
        return {};
    });
}

Verdict check_singleton_distance(Ctx& x) {
    if (!x.rgraph_3ec() || x.g.order() < 4) return {};
    x.applied = true;
    return pairwise_distance(x, [&](EdgeId e, EdgeId f) -> Verdict {
        if (x.class_size(e) != 1 && x.class_size(f) != 1) return {};
        int d = edge_distance(x.g, e, f);
        if (d != 1) return "singleton pair " + edge_str(x.g, e) + ", " + edge_str(x.g, f) + " at distance " + std::to_string(d);
        return {};
    });
}

Verdict check_solitary_distance(Ctx& x) {
    if (!x.rgraph_3ec() || x.da().pattern == SolitaryPattern{2}) return {};
    x.applied = true;
    return pairwise_distance(x, [&](EdgeId e, EdgeId f) -> Verdict {
        int d = edge_distance(x.g, e, f);
        if (d > 3) return "solitary edges " + edge_str(x.g, e) + ", " + edge_str(x.g, f) + " at distance " + std::to_string(d);
        return {};
    });
}

Verdict check_pattern_two(Ctx& x) {
    if (x.g.regular_degree() != 3 || !is_k_connected(x.g, 3)) return {};
    x.applied = true;
    bool two = x.da().pattern == SolitaryPattern{2};
    if (two != is_family_D(x.g)) return "recognizer disagrees with the pattern";
    if (two && x.g.order() < 14) return "pattern (2) below order 14";
    return {};
}

Verdict check_half_class(Ctx& x) {
    if (!x.matching_covered()) return {};
    x.applied = true;
    int n = x.g.order();
    bool half = x.da().epsilon * 2 == n;
    bool k2 = n == 2 && x.g.size() == 1;
    std::optional<LTrace> t = k2 ? std::nullopt : reconstruct_L_trace(x.g);
    bool rebuilt = false;
    if (t) {
        if (n > kCanonicalLimit) throw Error(Errc::TooLarge, "rebuilt trace comparison needs canonical forms");
        rebuilt = isomorphic(gen_family_L(*t), x.g);
        if (!rebuilt) return "trace " + t->str() + " does not regenerate the graph";
    }
    if (half != (k2 || rebuilt)) return half ? "half-order class without a trace" : "trace found without a half-order class";
    if (x.rgraph() && n >= 6) {
        auto sol = x.solitary();
        // n/2 solitary edges alone is not enough: order-8 staircases of
        // thickness two have two doubletons sharing a vertex
        if (half != is_perfect_matching(x.g, sol)) return "half-order class disagrees with the solitary matching";
    }
    return {};
}

Verdict check_deletion_unique(Ctx& x) {
    if (x.g.order() % 2 || x.g.order() > 12 || !is_matchable(x.g)) return {};
    x.applied = true;
    for (auto& e : x.g.edges()) {
        VertexSet drop(static_cast<std::size_t>(x.g.order()));
        drop.set(e.u);
        drop.set(e.v);
        bool um = is_uniquely_matchable(delete_vertices(x.g, drop).g);
        if (um != (x.ms().popcount(e.id) == 1)) return "edge " + edge_str(x.g, e.id) + " breaks the deletion rule";
    }
    return {};
}

Verdict check_cut_parity(Ctx& x) {
    int n = x.g.order();
    if (n % 2 || n > 20 || !is_matchable(x.g)) return {};
    x.applied = true;
    std::vector<std::uint32_t> shores;
    if (n <= 10) {
        for (std::uint32_t m = 1; m < (1u << n) - 1; ++m) shores.push_back(m);
    } else {
        std::uniform_int_distribution<std::uint32_t> d(1, (1u << n) - 2);
        for (int i = 0; i < 64; ++i) shores.push_back(d(x.rng));
    }
    for (std::uint32_t s : shores) {
        int size = std::popcount(s);
        for (auto& m : x.ms().matchings) {
            int c = 0;
            for (EdgeId e : m) c += ((s >> x.g.edge(e).u) ^ (s >> x.g.edge(e).v)) & 1u;
            if ((c - size) % 2) return "matching parity fails on a shore of size " + std::to_string(size);
        }
        bool odd_degrees = true;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) odd_degrees = odd_degrees && x.g.degree(v) % 2 == 1;
        if (odd_degrees) {
            int cut = 0;
            for (auto& e : x.g.edges()) cut += ((s >> e.u) ^ (s >> e.v)) & 1u;
            if ((cut - size) % 2) return "degree parity fails on a shore of size " + std::to_string(size);
        }
    }
    return {};
}

Verdict check_kotzig(Ctx& x) {
    if (x.g.order() % 2 || !is_matchable(x.g)) return {};
    std::vector<MultiGraph> targets;
    if (x.g.order() > 0 && x.ms().count() == 1) targets.push_back(x.g);
    for (EdgeId e : x.solitary()) {
        VertexSet drop(static_cast<std::size_t>(x.g.order()));
        drop.set(x.g.edge(e).u);
        drop.set(x.g.edge(e).v);
        auto h = delete_vertices(x.g, drop).g;
        if (h.order() > 0) targets.push_back(h);
    }
    if (targets.empty()) return {};
    x.applied = true;
    for (auto& h : targets) {
        EdgeId f = kotzig_1cut(h);
        auto ms = enumerate_pms(h);
        if (ms.count() != 1 || ms.popcount(f) != 1) return "1-cut edge is not in the unique matching";
        auto odd = odd_1cuts(h);
        if (std::find(odd.begin(), odd.end(), f) == odd.end()) return "returned edge is not an odd 1-cut";
    }
    return {};
}

Verdict check_solitary_colorable(Ctx& x) {
    if (!x.rgraph() || x.g.order() < 4 || x.solitary().empty()) return {};
    x.applied = true;
    if (!r_edge_coloring(x.g, x.r())) return "no r-edge-colouring";
    return {};
}

Verdict check_unique_coloring(Ctx& x) {
    int r = x.g.regular_degree();
    if (r < 1 || r > 31 || x.g.order() > 10 || x.g.order() % 2 || !is_connected(x.g)) return {};
    if (!r_edge_coloring(x.g, r)) return {};
    if (static_cast<int>(x.da().solitary.size()) < r - 1) return {};
    x.applied = true;
    long k = count_edge_colorings(x.g, r, 3);
    if (k != 1) return std::to_string(k) + " colourings up to permutation";
    return {};
}

Verdict check_class_count(Ctx& x) {
    if (!x.rgraph()) return {};
    x.applied = true;
    if (static_cast<int>(x.da().solitary.size()) > x.r()) return "more than r solitary classes";
    return {};
}

Verdict check_two_classes_connected(Ctx& x) {
    if (!x.rgraph() || x.da().solitary.size() < 2) return {};
    x.applied = true;
    if (!is_k_connected(x.g, 3)) return "two solitary classes in a graph that is not 3-connected";
    return {};
}

Verdict check_solitary_brick(Ctx& x) {
    if (!x.rgraph() || x.g.order() < 4 || !is_k_connected(x.g, 3) || x.solitary().empty()) return {};
    x.applied = true;
    auto v = classify_brick_brace(x.g);
    if (v.kind != BrickBraceKind::brick) return std::string("verdict ") + kind_name(v.kind);
    return {};
}

Verdict check_two_cut_in_matching(Ctx& x) {
    if (!x.rgraph() || x.rgraph_3ec() || x.da().solitary.empty()) return {};
    x.applied = true;
    if (x.da().solitary.size() > 1) return "more than one solitary class without 3-edge-connectivity";
    const auto& d = x.da().classes[x.da().solitary[0]];
    const PerfectMatching* pm = nullptr;
    for (auto& m : x.ms().matchings)
        if (std::find(m.begin(), m.end(), d[0]) != m.end()) pm = &m;
    for (const Cut& c : find_even_2cuts(x.g))
        for (EdgeId e : c.edge_ids)
            if (std::find(pm->begin(), pm->end(), e) == pm->end()) return "2-cut edge " + edge_str(x.g, e) + " missing";
    return {};
}

Verdict check_rainbow(Ctx& x) {
    if (!x.rgraph()) return {};
    auto tris = rainbow_triangles(x.g, x.r());
    if (tris.empty()) return {};
    x.applied = true;
    int classes = static_cast<int>(x.da().solitary.size());
    for (auto& t : tris) {
        int k = (x.g.multiplicity(t[0], t[1]) == 1) + (x.g.multiplicity(t[0], t[2]) == 1) +
                (x.g.multiplicity(t[1], t[2]) == 1);
        if (classes > k) return std::to_string(classes) + " solitary classes, triangle allows " + std::to_string(k);
    }
    return {};
}

Verdict check_cross_cut(Ctx& x) {
    if (x.g.order() < 4 || x.g.order() > kEnumerationLimit || !x.matching_covered() || !is_k_edge_connected(x.g, 2))
        return {};
    auto cuts = find_even_2cuts(x.g);
    if (cuts.empty()) return {};
    x.applied = true;
    const auto& ms = x.ms();
    for (const Cut& c : cuts)
        for (int side = 0; side < 2; ++side) {
            auto cc = classes_across_2cut(x.g, c, side);
            for (auto& t : cc.transfer)
                if (!t.consistent) return "class " + std::to_string(t.g_class) + " does not transfer";
            const auto& m = cc.component;
            auto cms = enumerate_pms(m.graph);
            EdgeId e1 = m.marker_edge;
            for (EdgeId f : c.edge_ids)
                for (EdgeId i = 0; i < m.graph.size(); ++i) {
                    if (i == e1) continue;
                    EdgeId d = m.edge_origin[i];
                    if (depends(ms, d, f) != depends(cms, i, e1)) return "dependence on the cut differs";
                    if (depends(ms, f, d) != depends(cms, e1, i)) return "dependence of the cut differs";
                    for (EdgeId j = 0; j < m.graph.size(); ++j) {
                        if (j == e1) continue;
                        if (depends(ms, d, m.edge_origin[j]) != depends(cms, i, j)) return "inner dependence differs";
                    }
                }
            auto [a, b] = marked_components(x.g, c);
            auto da = analyze(a.graph), db = analyze(b.graph);
            auto ca = da.classes[da.class_of[a.marker_edge]], cb = db.classes[db.class_of[b.marker_edge]];
            auto composed = compose_across_2cut(c, a, ca, b, cb);
            auto& gd = x.da().classes[x.da().class_of[c.edge_ids[0]]];
            if (composed != gd) return "composed class differs from the class of the cut";
        }
    return {};
}

Verdict run_check(Theorem t, Ctx& x) {
    switch (t) {
        case Theorem::solitary_bound: return check_solitary_bound(x);
        case Theorem::half_order_exceptions: return check_half_order(x);
        case Theorem::decomposition_unique: return check_decomposition(x);
        case Theorem::two_doubletons: return check_two_doubletons(x);
        case Theorem::doubleton_singleton: return check_doubleton_singleton(x);
        case Theorem::three_singletons: return check_three_singletons(x);
        case Theorem::exclusive_distance: return check_exclusive_distance(x);
        case Theorem::singleton_distance: return check_singleton_distance(x);
        case Theorem::solitary_distance: return check_solitary_distance(x);
        case Theorem::pattern_two_family: return check_pattern_two(x);
        case Theorem::half_class: return check_half_class(x);
        case Theorem::deletion_unique: return check_deletion_unique(x);
        case Theorem::cut_parity: return check_cut_parity(x);
        case Theorem::bridge_in_unique_matching: return check_kotzig(x);
        case Theorem::solitary_colorable: return check_solitary_colorable(x);
        case Theorem::unique_coloring: return check_unique_coloring(x);
        case Theorem::solitary_class_count: return check_class_count(x);
        case Theorem::two_classes_connected: return check_two_classes_connected(x);
        case Theorem::solitary_brick: return check_solitary_brick(x);
        case Theorem::two_cut_in_solitary_matching: return check_two_cut_in_matching(x);
        case Theorem::rainbow_bound: return check_rainbow(x);
        case Theorem::cross_cut_dependence: return check_cross_cut(x);
    }
    return {};
}

}  // namespace

VerifyReport verify(Theorem t, const std::vector<MultiGraph>& corpus, VerifyOptions opt) {
    struct Slot {
        bool applied = false, skipped = false;
        Verdict v;
    };
    std::vector<Slot> slots(corpus.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            std::mt19937 rng(opt.seed + static_cast<unsigned>(i));
            Ctx x(corpus[i], rng, opt);
            try {
                slots[i].v = run_check(t, x);
                slots[i].applied = x.applied;
            } catch (const Error& e) {
                if (e.code() == Errc::BoundExceeded || e.code() == Errc::TooLarge) slots[i].skipped = true;
                else {
                    slots[i].applied = true;
                    slots[i].v = std::string("unexpected error: ") + e.what();
                }
            }
        }
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, corpus.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    VerifyReport rep;
    rep.theorem = t;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (slots[i].skipped) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        rep.applied += slots[i].applied;
        if (slots[i].v) rep.violations.push_back({i, corpus[i], *slots[i].v});
    }
    return rep;
}

// ---- corpora

std::vector<MultiGraph> exhaustive_small_corpus(int max_n, int r) {
    int limit = r <= 3 ? 10 : r == 4 ? 8 : 6;
    if (r < 1) throw Error(Errc::BadParams, "degree must be positive");
    if (max_n > limit)
        throw Error(Errc::BoundExceeded, "exhaustive corpus for degree " + std::to_string(r) + " is bounded to order " +
                                             std::to_string(limit));
    std::vector<MultiGraph> out;
    for (int n = 2; n <= max_n; ++n) {
        if ((n * r) % 2) continue;
        std::map<std::string, MultiGraph> found;
        std::vector<std::vector<int>> mu(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        std::vector<int> rem(static_cast<std::size_t>(n), r);
        std::vector<char> touched(static_cast<std::size_t>(n), 0);

        std::function<void(int, int)> fill = [&](int i, int j) {
            if (i == n) {
                MultiGraph g(n);
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        for (int k = 0; k < mu[a][b]; ++k) g.add_edge(a, b);
                if (!is_connected(g)) return;
                std::string cf = canonical_form(g);
                found.emplace(cf, g);
                return;
            }
            if (j == n) {
                if (rem[i] == 0) fill(i + 1, i + 2);
                return;
            }
            int cap = 0;
            for (int k = j; k < n; ++k) cap += rem[k];
            if (cap < rem[i]) return;
            int hi = std::min(rem[i], rem[j]);
            // untouched later vertices are interchangeable: keep their
            // multiplicities nonincreasing
            if (!touched[j] && j > i + 1 && !touched[j - 1] && j - 1 > i) hi = std::min(hi, mu[i][j - 1]);
            for (int k = hi; k >= 0; --k) {
                if (n == 2 && k == 0 && rem[i] > 0 && j == n - 1) continue;
                bool was = touched[j];
                mu[i][j] = k;
                rem[i] -= k;
                rem[j] -= k;
                if (k) touched[j] = 1;
                fill(i, j + 1);
                touched[j] = was;
                rem[i] += k;
                rem[j] += k;
                mu[i][j] = 0;
            }
        };
        touched[0] = 1;
        fill(0, 1);
        for (auto& [cf, g] : found) out.push_back(g);
    }
    return out;
}

namespace {

std::optional<EdgeId> half_class_edge(const MultiGraph& g) {
    auto da = analyze(g);
    for (auto& cls : da.classes)
        if (static_cast<int>(cls.size()) * 2 == g.order()) return cls[0];
    return std::nullopt;
}

}  // namespace

std::vector<MultiGraph> family_corpus(int max_n, int max_t) {
    std::vector<MultiGraph> all;
    for (int r = 3; r <= max_t + 2; ++r) {
        for (Base b : {Base::theta, Base::k4, Base::c6bar, Base::c4}) {
            int parts = static_cast<int>(base_classes(b).size());
            std::vector<int> ks(static_cast<std::size_t>(parts), 1);
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == parts - 1) {
                    if (left >= 1) {
                        ks[i] = left;
                        all.push_back(gen_multiplied(b, ks, parts));
                    }
                    return;
                }
                for (int k = 1; k <= left - (parts - 1 - i); ++k) {
                    ks[i] = k;
                    rec(i + 1, left - k);
                }
            };
            rec(0, r);
        }
    }
    all.push_back(r8());
    all.push_back(r10());
    all.push_back(n10());
    for (int i = 1; i <= 5; ++i)
        if (gen_family_S(i).order() <= max_n) all.push_back(gen_family_S(i));
    for (int t = 1; t <= max_t; ++t)
        for (int n = 6; n <= max_n; n += 2) {
            all.push_back(gen_staircase1(n, t));
            if (n >= 8)
                for (auto [a, b] : staircase3_params(n)) all.push_back(gen_staircase3(a, b, t));
        }
    for (int n = 12; n + 2 <= max_n; n += 2)
        for (auto [a, b] : staircase3_params(n)) {
            MultiGraph base = gen_staircase3(a, b, 1);
            for (Vertex v : family_D_eligible(base, true)) all.push_back(gen_family_D({a, b, {v}}));
        }
    for (int r = 3; r <= max_t + 2; ++r) {
        std::vector<LTrace> leaves{LTrace::leaf_c2(r)};
        for (int k = 1; k <= r - 2; ++k) {
            int rest = r - 1 - k;
            if (rest >= 1 && k >= rest) leaves.push_back(LTrace::leaf_k4({k, rest, 1}));
        }
        for (auto& l : leaves)
            for (auto& m : leaves) {
                MultiGraph g1 = gen_family_L(l), g2 = gen_family_L(m);
                if (g1.order() + g2.order() > max_n) continue;
                auto e1 = half_class_edge(g1), e2 = half_class_edge(g2);
                if (e1 && e2) all.push_back(gen_family_L_r(r, LTrace::join(l, *e1, m, *e2)));
            }
    }
    std::map<std::string, MultiGraph> uniq;
    std::vector<MultiGraph> out;
    for (auto& g : all) {
        if (g.order() > max_n) continue;
        if (uniq.emplace(canonical_form(g), g).second) out.push_back(g);
    }
    return out;
}

}  // namespace mc
