#include "matchcov/matching.hpp"

#include <algorithm>

#include "matchcov/rgraph.hpp"

namespace mc {

namespace {

// Branch on the lowest uncovered vertex; incident edges in ascending id.
template <class Visit>
bool branch(const MultiGraph& g, std::vector<char>& covered, std::vector<EdgeId>& chosen, int from,
            Visit& visit) {
    int n = g.order();
    int v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) return visit(chosen);
    covered[v] = 1;
    for (EdgeId e : g.incident(v)) {
        int w = g.edge(e).other(v);
        if (covered[w]) continue;
        covered[w] = 1;
        chosen.push_back(e);
        bool stop = branch(g, covered, chosen, v + 1, visit);
        chosen.pop_back();
        covered[w] = 0;
        if (stop) {
            covered[v] = 0;
            return true;
        }
    }
    covered[v] = 0;
    return false;
}

}  // namespace

MatchingSet enumerate_pms(const MultiGraph& g, EnumerateOptions opt) {
    if (g.order() % 2) throw Error(Errc::OddOrder, "odd order has no perfect matching");
    if (!opt.unbounded && g.order() > opt.bound)
        throw Error(Errc::BoundExceeded, "order " + std::to_string(g.order()) + " above enumeration bound " +
                                             std::to_string(opt.bound));
    MatchingSet ms;
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    std::vector<EdgeId> chosen;
    auto visit = [&](const std::vector<EdgeId>& m) {
        PerfectMatching pm = m;
        std::sort(pm.begin(), pm.end());
        ms.matchings.push_back(std::move(pm));
        return false;
    };
    branch(g, covered, chosen, 0, visit);
    std::sort(ms.matchings.begin(), ms.matchings.end());
    ms.incidence.assign(static_cast<std::size_t>(g.size()), Bits(ms.matchings.size()));
    for (std::size_t j = 0; j < ms.matchings.size(); ++j)
        for (EdgeId e : ms.matchings[j]) ms.incidence[e].set(j);
    return ms;
}

long count_pms(const MultiGraph& g, long limit) {
    if (g.order() % 2) return 0;
    long c = 0;
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    std::vector<EdgeId> chosen;
    auto visit = [&](const std::vector<EdgeId>&) { return ++c >= limit; };
    branch(g, covered, chosen, 0, visit);
    return c;
}

bool is_matchable(const MultiGraph& g) { return count_pms(g, 1) >= 1; }

std::optional<PerfectMatching> matching_containing(const MultiGraph& g, EdgeId e) {
    if (g.order() % 2) return std::nullopt;
    const Edge& ed = g.edge(e);
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    covered[ed.u] = covered[ed.v] = 1;
    std::vector<EdgeId> chosen{e};
    std::optional<PerfectMatching> found;
    auto visit = [&](const std::vector<EdgeId>& m) {
        PerfectMatching pm = m;
        std::sort(pm.begin(), pm.end());
        found = pm;
        return true;
    };
    branch(g, covered, chosen, 0, visit);
    return found;
}

bool is_perfect_matching(const MultiGraph& g, const std::vector<EdgeId>& m) {
    std::vector<int> hit(static_cast<std::size_t>(g.order()), 0);
    for (EdgeId e : m) {
        if (e < 0 || e >= g.size()) return false;
        ++hit[g.edge(e).u];
        ++hit[g.edge(e).v];
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

CoverResult is_matching_covered(const MultiGraph& g) {
    CoverResult r;
    if (g.order() < 2) {
        r.reason = "order below two";
        return r;
    }
    if (!is_connected(g)) {
        r.reason = "disconnected";
        return r;
    }
    if (g.order() % 2) {
        r.reason = "odd order";
        if (g.size()) r.witness = 0;
        return r;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (auto& e : g.edges()) {
        if (seen[e.id]) continue;
        auto pm = matching_containing(g, e.id);
        if (!pm) {
            r.witness = e.id;
            r.reason = "edge " + std::to_string(e.id) + " lies in no perfect matching";
            return r;
        }
        for (EdgeId f : *pm) seen[f] = 1;
    }
    r.covered = true;
    return r;
}

bool is_matching_double_covered(const MultiGraph& g) {
    auto ms = enumerate_pms(g);
    for (auto& b : ms.incidence)
        if (b.count() < 2) return false;
    return true;
}

std::vector<EdgeId> solitary_edges(const MatchingSet& ms) {
    if (ms.matchings.empty()) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < ms.incidence.size(); ++e)
        if (ms.incidence[e].count() == 1) out.push_back(static_cast<EdgeId>(e));
    return out;
}

std::vector<EdgeId> solitary_edges(const MultiGraph& g) { return solitary_edges(enumerate_pms(g)); }

bool is_uniquely_matchable(const MultiGraph& g) {
    if (g.order() == 0) return true;
    return count_pms(g, 2) == 1;
}

std::vector<EdgeId> odd_1cuts(const MultiGraph& g) {
    std::vector<EdgeId> out;
    for (EdgeId f : bridges(g)) {
        auto h = delete_edges(g, {f});
        std::vector<int> comp;
        components(h.g, comp);
        int side = comp[g.edge(f).u];
        int sz = static_cast<int>(std::count(comp.begin(), comp.end(), side));
        if (sz % 2) out.push_back(f);
    }
    return out;
}

EdgeId kotzig_1cut(const MultiGraph& g) {
    if (g.order() == 0 || !is_uniquely_matchable(g))
        throw Error(Errc::NotUniquelyMatchable, "graph is not a nonnull uniquely matchable graph");
    auto cuts = odd_1cuts(g);
    if (cuts.empty()) throw Error(Errc::PreconditionUnmet, "no odd 1-cut found");
    return cuts.front();
}

CompanionCertificate companion_of(const MultiGraph& g, EdgeId e) {
    auto cert = certify_rgraph(g);
    if (!cert.ok) throw Error(Errc::NotRGraph, cert.refusal);
    if (g.order() < 4) throw Error(Errc::OrderTooSmall, "companion needs order four or more");
    const Edge& ed = g.edge(e);
    VertexSet uv(static_cast<std::size_t>(g.order()));
    uv.set(ed.u);
    uv.set(ed.v);
    auto h = delete_vertices(g, uv);
    if (count_pms(h.g, 2) != 1) throw Error(Errc::NotSolitary, "edge " + std::to_string(e) + " is not solitary");
    auto cuts = odd_1cuts(h.g);
    if (cuts.empty()) throw Error(Errc::PreconditionUnmet, "no odd 1-cut in G-u-v");
    EdgeId f = cuts.front();
    auto hf = delete_edges(h.g, {f});
    std::vector<int> comp;
    components(hf.g, comp);
    int side = comp[h.g.edge(f).u];
    VertexSet x(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < h.g.order(); ++w)
        if (comp[w] == side) x.set(h.vertex_origin[w]);
    VertexSet y = ~(x | uv);
    CompanionCertificate c;
    c.solitary_edge = e;
    c.companion = h.edge_origin[f];
    c.cut_C = cut_of(g, x);
    c.cut_D = cut_of(g, y);
    c.unique = cuts.size() == 1;
    return c;
}

}  // namespace mc
