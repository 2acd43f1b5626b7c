#include "matchcov/dependence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mc {

namespace {

void require_matchable(const MatchingSet& ms, EdgeId e) {
    if (e < 0 || static_cast<std::size_t>(e) >= ms.incidence.size())
        throw Error(Errc::BadIndex, "edge id out of range");
    if (ms.incidence[e].none()) throw Error(Errc::UnmatchableEdge, "edge " + std::to_string(e) + " is unmatchable");
}

}  // namespace

bool depends(const MatchingSet& ms, EdgeId e, EdgeId f) {
    require_matchable(ms, e);
    require_matchable(ms, f);
    return ms.incidence[e].subset_of(ms.incidence[f]);
}

bool mutually_exclusive(const MatchingSet& ms, EdgeId e, EdgeId f) {
    require_matchable(ms, e);
    require_matchable(ms, f);
    return !ms.incidence[e].intersects(ms.incidence[f]);
}

DependenceAnalysis analyze(const MultiGraph& g) {
    if (g.order() % 2 || g.order() < 2 || !is_connected(g))
        throw Error(Errc::NotMatchingCovered, "graph is not matching covered");
    return analyze(g, enumerate_pms(g));
}

DependenceAnalysis analyze(const MultiGraph& g, const MatchingSet& ms) {
    if (g.order() < 2 || !is_connected(g)) throw Error(Errc::NotMatchingCovered, "graph is not matching covered");
    for (EdgeId e = 0; e < g.size(); ++e)
        if (ms.incidence[e].none())
            throw Error(Errc::NotMatchingCovered, "edge " + std::to_string(e) + " lies in no perfect matching");

    DependenceAnalysis da;
    std::unordered_map<Bits, std::vector<EdgeId>, BitsHash> groups;
    for (EdgeId e = 0; e < g.size(); ++e) groups[ms.incidence[e]].push_back(e);
    for (auto& [bits, es] : groups) da.classes.push_back(es);
    std::sort(da.classes.begin(), da.classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a[0] < b[0];
    });
    int k = static_cast<int>(da.classes.size());
    da.class_of.assign(static_cast<std::size_t>(g.size()), -1);
    for (int i = 0; i < k; ++i)
        for (EdgeId e : da.classes[i]) da.class_of[e] = i;

    auto inc = [&](int c) -> const Bits& { return ms.incidence[da.classes[c][0]]; };
    da.reach.assign(static_cast<std::size_t>(k), Bits(static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (inc(a).subset_of(inc(b))) da.reach[a].set(b);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b || !da.reach[a].test(b)) continue;
            bool covered = false;
            for (int c = 0; c < k && !covered; ++c)
                covered = c != a && c != b && da.reach[a].test(c) && da.reach[c].test(b);
            if (!covered) da.poset_edges.emplace_back(a, b);
        }

    for (int b = 0; b < k; ++b) {
        bool minimal = true;
        for (int a = 0; a < k && minimal; ++a) minimal = a == b || !da.reach[a].test(b);
        if (!minimal) continue;
        da.minimal.push_back(b);
        if (is_connected(delete_edges(g, da.classes[b]).g)) da.removable.push_back(b);
    }
    for (int c = 0; c < k; ++c)
        if (inc(c).count() == 1) {
            da.solitary.push_back(c);
            da.pattern.push_back(static_cast<int>(da.classes[c].size()));
        }
    std::sort(da.pattern.rbegin(), da.pattern.rend());
    if (k) {
        da.epsilon = static_cast<int>(da.classes[0].size());
        da.epsilon_class = 0;
    }
    return da;
}

SolitaryPattern solitary_pattern(const MultiGraph& g) { return analyze(g).pattern; }

std::string pattern_string(const SolitaryPattern& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

CrossCutClasses classes_across_2cut(const MultiGraph& g, const Cut& c, int side) {
    if (side != 0 && side != 1) throw Error(Errc::BadParams, "side must be 0 or 1");
    auto parts = marked_components(g, c);
    CrossCutClasses out{side ? parts.second : parts.first, {}, {}};
    auto da = analyze(g);
    out.component_analysis = analyze(out.component.graph);

    std::map<EdgeId, EdgeId> local;
    for (std::size_t i = 0; i < out.component.edge_origin.size(); ++i)
        if (out.component.edge_origin[i] >= 0) local[out.component.edge_origin[i]] = static_cast<EdgeId>(i);

    for (int d = 0; d < static_cast<int>(da.classes.size()); ++d) {
        const auto& cls = da.classes[d];
        int hits = 0;
        for (EdgeId e : c.edge_ids) hits += std::count(cls.begin(), cls.end(), e) > 0;
        ClassTransfer t{d, hits == c.size(), hits == 0, -1, false};
        std::vector<EdgeId> image;
        for (EdgeId e : cls)
            if (auto it = local.find(e); it != local.end()) image.push_back(it->second);
        if (t.contains_cut) image.push_back(out.component.marker_edge);
        std::sort(image.begin(), image.end());
        if (image.empty()) {
            t.consistent = t.avoids_cut;
        } else {
            t.side_class = out.component_analysis.class_of[image[0]];
            t.consistent = (t.contains_cut || t.avoids_cut) &&
                           out.component_analysis.classes[t.side_class] == image;
        }
        out.transfer.push_back(t);
    }
    return out;
}

std::vector<EdgeId> compose_across_2cut(const Cut& c, const MarkedComponent& a, const std::vector<EdgeId>& d1,
                                        const MarkedComponent& b, const std::vector<EdgeId>& d2) {
    auto add = [](const MarkedComponent& m, const std::vector<EdgeId>& d, std::vector<EdgeId>& out) {
        if (std::find(d.begin(), d.end(), m.marker_edge) == d.end())
            throw Error(Errc::BadParams, "class does not contain the marker edge");
        for (EdgeId e : d)
            if (e != m.marker_edge) out.push_back(m.edge_origin[e]);
    };
    std::vector<EdgeId> out(c.edge_ids);
    add(a, d1, out);
    add(b, d2, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mc
