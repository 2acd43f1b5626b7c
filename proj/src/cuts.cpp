#include "matchcov/cuts.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "matchcov/dependence.hpp"
#include "matchcov/matching.hpp"

namespace mc {

std::vector<Cut> find_even_2cuts(const MultiGraph& g) {
    int n = g.order();
    std::vector<Cut> out;
    if (n % 2 || n < 4) return out;
    if (n <= kShoreScanLimit) {
        std::uint32_t lim = 1u << (n - 1);
        for (std::uint32_t m = 0; m < lim; ++m) {
            if (std::popcount(m) % 2 == 0) continue;  // shore = m plus vertex 0, even
            std::uint32_t x = (m << 1) | 1u;
            if (static_cast<int>(std::popcount(x)) == n) continue;
            int c = 0;
            for (auto& e : g.edges()) {
                c += ((x >> e.u) ^ (x >> e.v)) & 1u;
                if (c > 2) break;
            }
            if (c == 2) out.push_back(cut_of_mask(g, x));
        }
    } else {
        if (!bridges(g).empty())
            throw Error(Errc::BoundExceeded, "2-cut search above order " + std::to_string(kShoreScanLimit) +
                                                 " needs a bridgeless graph");
        for (EdgeId a = 0; a < g.size(); ++a)
            for (EdgeId b = a + 1; b < g.size(); ++b) {
                auto h = delete_edges(g, {a, b});
                std::vector<int> comp;
                if (components(h.g, comp) != 2) continue;
                VertexSet x(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v)
                    if (comp[v] == comp[0]) x.set(v);
                if (x.count() % 2 == 0) out.push_back(cut_of(g, x));
            }
    }
    std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
        if (a.edge_ids != b.edge_ids) return a.edge_ids < b.edge_ids;
        return a.shore < b.shore;
    });
    return out;
}

namespace {

MarkedComponent side_component(const MultiGraph& g, const VertexSet& x, EdgeId f, EdgeId fp) {
    MarkedComponent mcmp;
    auto s = induced(g, x);
    mcmp.graph = s.g;
    mcmp.vertex_origin = s.vertex_origin;
    mcmp.edge_origin = s.edge_origin;
    auto local = [&](Vertex v) {
        auto it = std::find(s.vertex_origin.begin(), s.vertex_origin.end(), v);
        return static_cast<Vertex>(it - s.vertex_origin.begin());
    };
    Vertex a = x.test(g.edge(f).u) ? g.edge(f).u : g.edge(f).v;
    Vertex b = x.test(g.edge(fp).u) ? g.edge(fp).u : g.edge(fp).v;
    if (a == b) throw Error(Errc::NotEven2Cut, "cut edges share an end; marker would be a loop");
    mcmp.marker_edge = mcmp.graph.add_edge(local(a), local(b));
    mcmp.edge_origin.push_back(-1);
    mcmp.f = f;
    mcmp.f_prime = fp;
    return mcmp;
}

}  // namespace

std::pair<MarkedComponent, MarkedComponent> marked_components(const MultiGraph& g, const Cut& c) {
    if (c.size() != 2 || c.parity != Parity::even || c.shore.none() || c.co_shore.none())
        throw Error(Errc::NotEven2Cut, "cut is not an even 2-cut");
    EdgeId f = c.edge_ids[0], fp = c.edge_ids[1];
    return {side_component(g, c.shore, f, fp), side_component(g, c.co_shore, f, fp)};
}

MultiGraph glue(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, EdgeId e2, bool crossed) {
    int n1 = g1.order();
    MultiGraph h(n1 + g2.order());
    for (auto& e : g1.edges())
        if (e.id != e1) h.add_edge(e.u, e.v);
    for (auto& e : g2.edges())
        if (e.id != e2) h.add_edge(e.u + n1, e.v + n1);
    Vertex a = g2.edge(e2).u + n1, b = g2.edge(e2).v + n1;
    if (crossed) std::swap(a, b);
    h.add_edge(g1.edge(e1).u, a);
    h.add_edge(g1.edge(e1).v, b);
    return h;
}

std::vector<int> DecompositionTree::leaf_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!nodes[i].cut) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<MultiGraph> DecompositionTree::leaves() const {
    std::vector<MultiGraph> out;
    for (int i : leaf_ids()) out.push_back(nodes[i].graph);
    return out;
}

DecompositionTree decompose_2cuts(const MultiGraph& g, std::mt19937* rng) {
    if (!is_k_edge_connected(g, 2) || g.order() < 2)
        throw Error(Errc::NotTwoConnected, "decomposition needs a 2-edge-connected graph");
    DecompositionTree t;
    t.nodes.push_back({g, std::nullopt, {-1, -1}, -1, std::nullopt});
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        auto cuts = find_even_2cuts(t.nodes[i].graph);
        if (cuts.empty()) continue;
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, cuts.size() - 1)(*rng);
        Cut c = cuts[pick];
        auto [a, b] = marked_components(t.nodes[i].graph, c);
        t.nodes[i].cut = c;
        int ia = static_cast<int>(t.nodes.size());
        t.nodes.push_back({a.graph, std::nullopt, {-1, -1}, i, a});
        t.nodes.push_back({b.graph, std::nullopt, {-1, -1}, i, b});
        t.nodes[i].child[0] = ia;
        t.nodes[i].child[1] = ia + 1;
        stack.push_back(ia + 1);
        stack.push_back(ia);
    }
    return t;
}

std::vector<std::string> leaf_multiset(const DecompositionTree& t) {
    std::vector<std::string> out;
    for (auto& l : t.leaves()) out.push_back(canonical_form(l));
    std::sort(out.begin(), out.end());
    return out;
}

Contraction contract(const MultiGraph& g, const VertexSet& x) {
    int n = g.order();
    std::size_t k = x.count();
    if (k == 0 || static_cast<int>(k) == n) throw Error(Errc::EmptyOrFullShore, "shore must be proper and nonempty");
    Contraction c;
    c.vertex_map.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!x.test(v)) c.vertex_map[v] = next++;
    c.contraction_vertex = next;
    for (int v = 0; v < n; ++v)
        if (x.test(v)) c.vertex_map[v] = next;
    c.g = MultiGraph(next + 1);
    for (auto& e : g.edges()) {
        if (x.test(e.u) && x.test(e.v)) {
            c.deleted_inner.push_back(e.id);
            continue;
        }
        c.g.add_edge(c.vertex_map[e.u], c.vertex_map[e.v]);
        c.edge_origin.push_back(e.id);
    }
    c.shore_disconnected = !is_connected_on(g, x);
    return c;
}

MultiGraph splice(const MultiGraph& g1, Vertex v1, const MultiGraph& g2, Vertex v2,
                  const std::vector<std::pair<EdgeId, EdgeId>>& pi) {
    if (g1.degree(v1) != g2.degree(v2)) throw Error(Errc::DegreeMismatch, "splice vertices differ in degree");
    std::vector<EdgeId> a = g1.incident(v1), b = g2.incident(v2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (pi.size() != a.size()) throw Error(Errc::BadParams, "pi must pair every edge at v1");
    std::vector<std::pair<EdgeId, EdgeId>> p = pi;
    std::sort(p.begin(), p.end());
    std::vector<EdgeId> img;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].first != a[i]) throw Error(Errc::BadParams, "pi domain is not the edge set at v1");
        img.push_back(p[i].second);
    }
    std::sort(img.begin(), img.end());
    if (img != b) throw Error(Errc::BadParams, "pi image is not the edge set at v2");

    std::vector<int> m1(static_cast<std::size_t>(g1.order()), -1), m2(static_cast<std::size_t>(g2.order()), -1);
    int next = 0;
    for (int v = 0; v < g1.order(); ++v)
        if (v != v1) m1[v] = next++;
    for (int v = 0; v < g2.order(); ++v)
        if (v != v2) m2[v] = next++;
    MultiGraph h(next);
    for (auto& e : g1.edges())
        if (!e.touches(v1)) h.add_edge(m1[e.u], m1[e.v]);
    for (auto& e : g2.edges())
        if (!e.touches(v2)) h.add_edge(m2[e.u], m2[e.v]);
    for (auto [e, f] : p) h.add_edge(m1[g1.edge(e).other(v1)], m2[g2.edge(f).other(v2)]);
    return h;
}

MultiGraph splice(const MultiGraph& g1, Vertex v1, const MultiGraph& g2, Vertex v2) {
    if (g1.degree(v1) != g2.degree(v2)) throw Error(Errc::DegreeMismatch, "splice vertices differ in degree");
    std::vector<EdgeId> a = g1.incident(v1), b = g2.incident(v2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<std::pair<EdgeId, EdgeId>> pi;
    for (std::size_t i = 0; i < a.size(); ++i) pi.emplace_back(a[i], b[i]);
    return splice(g1, v1, g2, v2, pi);
}

MultiGraph splice_k4(const MultiGraph& g, Vertex v) {
    if (g.degree(v) != 3) throw Error(Errc::DegreeMismatch, "splicing with K4 needs a degree-3 vertex");
    int n = g.order();
    std::vector<EdgeId> at = g.incident(v);
    std::sort(at.begin(), at.end());
    MultiGraph h(n + 2);
    for (auto& e : g.edges()) {
        Vertex u = e.u, w = e.v;
        if (e.id == at[1]) (u == v ? u : w) = n;
        if (e.id == at[2]) (u == v ? u : w) = n + 1;
        h.add_edge(u, w);
    }
    h.add_edge(v, n);
    h.add_edge(v, n + 1);
    h.add_edge(n, n + 1);
    return h;
}

namespace {

void require_mc(const MultiGraph& g) {
    if (!is_matching_covered(g).covered) throw Error(Errc::NotMatchingCovered, "graph is not matching covered");
}

void require_proper(const MultiGraph& g, const Cut& c) {
    std::size_t k = c.shore.count();
    if (k == 0 || static_cast<int>(k) == g.order())
        throw Error(Errc::EmptyOrFullShore, "cut shore must be proper and nonempty");
}

int crossings(const MultiGraph& g, const PerfectMatching& m, const VertexSet& x) {
    int c = 0;
    for (EdgeId e : m) c += x.test(g.edge(e).u) != x.test(g.edge(e).v);
    return c;
}

}  // namespace

bool is_separating_cut(const MultiGraph& g, const Cut& c) {
    require_mc(g);
    require_proper(g, c);
    return is_matching_covered(contract(g, c.shore).g).covered &&
           is_matching_covered(contract(g, c.co_shore).g).covered;
}

bool is_separating_by_matchings(const MultiGraph& g, const Cut& c) {
    require_mc(g);
    require_proper(g, c);
    auto ms = enumerate_pms(g);
    std::vector<char> ok(static_cast<std::size_t>(g.size()), 0);
    for (auto& m : ms.matchings)
        if (crossings(g, m, c.shore) == 1)
            for (EdgeId e : m) ok[e] = 1;
    return std::all_of(ok.begin(), ok.end(), [](char b) { return b != 0; });
}

bool is_tight_cut(const MultiGraph& g, const Cut& c) {
    require_mc(g);
    auto ms = enumerate_pms(g);
    for (auto& m : ms.matchings)
        if (crossings(g, m, c.shore) != 1) return false;
    return true;
}

const char* kind_name(BrickBraceKind k) {
    switch (k) {
        case BrickBraceKind::brick: return "brick";
        case BrickBraceKind::brace: return "brace";
        case BrickBraceKind::has_nontrivial_tight_cut: return "has_nontrivial_tight_cut";
        case BrickBraceKind::not_matching_covered: return "not_matching_covered";
    }
    return "?";
}

BrickBraceVerdict classify_brick_brace(const MultiGraph& g) {
    if (!is_matching_covered(g).covered) return {BrickBraceKind::not_matching_covered, std::nullopt};
    int n = g.order();
    if (n > kTightCutScanLimit)
        throw Error(Errc::BoundExceeded, "tight cut scan is bounded to order " + std::to_string(kTightCutScanLimit));
    auto ms = enumerate_pms(g);
    std::vector<std::vector<std::pair<int, int>>> pms;
    for (auto& m : ms.matchings) {
        std::vector<std::pair<int, int>> p;
        for (EdgeId e : m) p.emplace_back(g.edge(e).u, g.edge(e).v);
        pms.push_back(std::move(p));
    }
    std::uint32_t lim = n >= 1 ? 1u << (n - 1) : 0;
    for (std::uint32_t m = 0; m < lim; ++m) {
        int k = std::popcount(m) + 1;
        if (k % 2 == 0 || k < 3 || k > n - 3) continue;
        std::uint32_t x = (m << 1) | 1u;
        bool tight = true;
        for (auto& p : pms) {
            int c = 0;
            for (auto [u, v] : p) c += ((x >> u) ^ (x >> v)) & 1u;
            if (c != 1) {
                tight = false;
                break;
            }
        }
        if (tight) return {BrickBraceKind::has_nontrivial_tight_cut, cut_of_mask(g, x)};
    }
    return {is_bipartite(g) ? BrickBraceKind::brace : BrickBraceKind::brick, std::nullopt};
}

bool is_bicritical(const MultiGraph& g) {
    int n = g.order();
    if (n < 4) throw Error(Errc::OrderTooSmall, "bicriticality needs order four or more");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet drop(static_cast<std::size_t>(n));
            drop.set(u);
            drop.set(v);
            if (!is_matchable(delete_vertices(g, drop).g)) return false;
        }
    return true;
}

std::optional<NearBipartiteWitness> near_bipartite_witness(const MultiGraph& g) {
    require_mc(g);
    if (is_bipartite(g)) throw Error(Errc::Bipartite, "graph is bipartite");
    auto da = analyze(g);
    for (auto& cls : da.classes) {
        if (cls.size() != 2) continue;
        auto h = delete_edges(g, cls);
        auto bp = bipartition(h.g);
        if (!bp || !is_matching_covered(h.g).covered) continue;
        NearBipartiteWitness w;
        w.removed = cls;
        w.a = bp->first;
        w.b = bp->second;
        const Edge& al = g.edge(cls[0]);
        if (w.b.test(al.u)) std::swap(w.a, w.b);
        const Edge& be = g.edge(cls[1]);
        w.lovasz_ok = w.a.test(al.u) && w.a.test(al.v) && w.b.test(be.u) && w.b.test(be.v) &&
                      w.a.count() == w.b.count();
        return w;
    }
    return std::nullopt;
}

}  // namespace mc
