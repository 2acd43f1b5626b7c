#include "matchcov/rgraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

namespace mc {

RGraphResult certify_rgraph(const MultiGraph& g) {
    RGraphResult res;
    int n = g.order();
    if (n == 0) {
        res.refusal = "null graph";
        return res;
    }
    if (!is_connected(g)) {
        res.refusal = "disconnected";
        return res;
    }
    int r = g.regular_degree();
    res.cert.regular = r >= 0;
    if (r < 0) {
        for (int v = 1; v < n; ++v)
            if (g.degree(v) != g.degree(0)) {
                res.degree_anomaly = v;
                break;
            }
        res.refusal = "not regular: vertex " + std::to_string(*res.degree_anomaly) + " has degree " +
                      std::to_string(g.degree(*res.degree_anomaly)) + ", vertex 0 has degree " +
                      std::to_string(g.degree(0));
        return res;
    }
    res.cert.r = r;
    if (r < 3) {
        res.degree_anomaly = 0;
        res.refusal = "regular of degree " + std::to_string(r) + " < 3";
        return res;
    }
    if (n % 2) {
        res.refusal = "odd order";
        return res;
    }
    OddCut oc = min_odd_cut(g);
    res.cert.min_odd_cut = oc.value;
    res.cert.is_3ec = is_k_edge_connected(g, 3);
    if (oc.value < r) {
        res.violating_shore = oc.shore;
        res.refusal = "odd cut with " + std::to_string(oc.value) + " < " + std::to_string(r) + " edges";
        return res;
    }
    res.ok = true;
    return res;
}

OddCut min_odd_cut(const MultiGraph& g) {
    int n = g.order();
    if (n % 2) throw Error(Errc::OddOrder, "min_odd_cut needs even order");
    if (n == 0) throw Error(Errc::BadParams, "null graph has no odd cut");
    if (n > kShoreScanLimit) return min_odd_cut_gomory_hu(g);
    int best = std::numeric_limits<int>::max();
    std::uint32_t best_x = 1;
    std::uint32_t lim = 1u << (n - 1);
    for (std::uint32_t m = 0; m < lim; ++m) {
        if (std::popcount(m) % 2) continue;
        std::uint32_t x = (m << 1) | 1u;
        int c = 0;
        for (auto& e : g.edges()) c += ((x >> e.u) ^ (x >> e.v)) & 1u;
        if (c < best) {
            best = c;
            best_x = x;
        }
    }
    return {best, Bits::from_mask(static_cast<std::size_t>(n), best_x)};
}

OddCut min_odd_cut_gomory_hu(const MultiGraph& g) {
    int n = g.order();
    if (n % 2) throw Error(Errc::OddOrder, "min_odd_cut needs even order");
    std::vector<int> p(static_cast<std::size_t>(n), 0), fl(static_cast<std::size_t>(n), 0);
    for (int s = 1; s < n; ++s) {
        int t = p[s];
        VertexSet x;
        int cut = min_st_cut(g, s, t, x);
        fl[s] = cut;
        for (int i = 0; i < n; ++i)
            if (i != s && x.test(i) && p[i] == t) p[i] = s;
        if (x.test(p[t])) {
            p[s] = p[t];
            p[t] = s;
            fl[s] = fl[t];
            fl[t] = cut;
        }
    }
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        tree[i].push_back(p[i]);
        tree[p[i]].push_back(i);
    }
    OddCut best{std::numeric_limits<int>::max(), VertexSet(static_cast<std::size_t>(n))};
    for (int i = 1; i < n; ++i) {
        VertexSet side(static_cast<std::size_t>(n));
        std::vector<int> st{i};
        side.set(i);
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : tree[x]) {
                if ((x == i && y == p[i]) || side.test(y)) continue;
                side.set(y);
                st.push_back(y);
            }
        }
        if (side.count() % 2 == 0) continue;
        int value = static_cast<int>(boundary(g, side).size());
        if (value < best.value) best = {value, side};
    }
    return best;
}

std::vector<std::vector<EdgeId>> EdgeColoring::classes() const {
    std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(r));
    for (std::size_t e = 0; e < color_of.size(); ++e) out[color_of[e]].push_back(static_cast<EdgeId>(e));
    return out;
}

namespace {

// Fail-first colouring search. New colours are introduced in increasing
// order, so each colouring is produced once up to colour permutation.
class Colorer {
public:
    Colorer(const MultiGraph& g, int r)
        : g_(g), r_(r), color_(static_cast<std::size_t>(g.size()), -1),
          used_(static_cast<std::size_t>(g.order()), 0), count_(static_cast<std::size_t>(r), 0) {}

    template <class Visit>
    bool run(Visit& visit) {
        return rec(visit, g_.size());
    }
    const std::vector<int>& colors() const { return color_; }

private:
    std::uint32_t candidates(const Edge& e) const {
        std::uint32_t all = (r_ >= 32) ? ~0u : ((1u << r_) - 1);
        std::uint32_t avail = ~(used_[e.u] | used_[e.v]) & all;
        std::uint32_t introduced = top_ >= 32 ? ~0u : ((1u << top_) - 1);
        std::uint32_t c = avail & introduced;
        if (top_ < r_ && (avail >> top_) & 1u) c |= 1u << top_;
        return c;
    }

    template <class Visit>
    bool rec(Visit& visit, int left) {
        if (left == 0) return visit(color_);
        int pick = -1, best = 64;
        for (auto& e : g_.edges()) {
            if (color_[e.id] >= 0) continue;
            int c = std::popcount(candidates(e));
            if (c < best) {
                best = c;
                pick = e.id;
                if (c == 0) return false;
            }
        }
        const Edge& e = g_.edge(pick);
        std::uint32_t cand = candidates(e);
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            color_[pick] = c;
            used_[e.u] |= 1u << c;
            used_[e.v] |= 1u << c;
            if (count_[c]++ == 0) top_ = std::max(top_, c + 1);
            bool stop = rec(visit, left - 1);
            if (--count_[c] == 0)
                while (top_ > 0 && count_[top_ - 1] == 0) --top_;
            used_[e.u] &= ~(1u << c);
            used_[e.v] &= ~(1u << c);
            color_[pick] = -1;
            if (stop) return true;
        }
        return false;
    }

    const MultiGraph& g_;
    int r_;
    std::vector<int> color_;
    std::vector<std::uint32_t> used_;
    std::vector<int> count_;
    int top_ = 0;
};

void require_regular(const MultiGraph& g, int r) {
    if (g.regular_degree() != r) throw Error(Errc::NotRegular, "graph is not " + std::to_string(r) + "-regular");
    if (r < 1 || r > 31) throw Error(Errc::BadParams, "colour count out of range");
}

}  // namespace

std::optional<EdgeColoring> r_edge_coloring(const MultiGraph& g, int r) {
    require_regular(g, r);
    Colorer c(g, r);
    std::optional<EdgeColoring> out;
    auto visit = [&](const std::vector<int>& col) {
        out = EdgeColoring{r, col};
        return true;
    };
    c.run(visit);
    if (out)
        for (auto& cls : out->classes())
            if (!is_perfect_matching(g, cls)) throw Error(Errc::PreconditionUnmet, "colour class is not a perfect matching");
    return out;
}

long count_edge_colorings(const MultiGraph& g, int r, long limit) {
    require_regular(g, r);
    Colorer c(g, r);
    long k = 0;
    auto visit = [&](const std::vector<int>&) { return ++k >= limit; };
    c.run(visit);
    return k;
}

MultiGraph multiply_matching(const MultiGraph& g, const PerfectMatching& m, int k) {
    if (!is_perfect_matching(g, m)) throw Error(Errc::NotPerfectMatching, "edge set is not a perfect matching");
    if (k < 1) throw Error(Errc::BadParams, "multiplier must be positive");
    MultiGraph h = g;
    std::vector<EdgeId> ids = m;
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids)
        for (int i = 1; i < k; ++i) h.add_edge(g.edge(e).u, g.edge(e).v);
    return h;
}

std::vector<Triangle> rainbow_triangles(const MultiGraph& g, int r) {
    int n = g.order();
    std::vector<int> mu(static_cast<std::size_t>(n * n), 0);
    for (auto& e : g.edges()) {
        ++mu[static_cast<std::size_t>(e.u * n + e.v)];
        ++mu[static_cast<std::size_t>(e.v * n + e.u)];
    }
    auto m = [&](int a, int b) { return mu[static_cast<std::size_t>(a * n + b)]; };
    std::vector<Triangle> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!m(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (m(a, c) && m(b, c) && m(a, b) + m(a, c) + m(b, c) == r) out.push_back({a, b, c});
        }
    return out;
}

CubicCore cubic_core_for_pair(const MultiGraph& g, const EdgeColoring& coloring, EdgeId e1, EdgeId e2,
                              int chosen) {
    auto cert = certify_rgraph(g);
    if (!cert.ok) throw Error(Errc::PreconditionUnmet, "not an r-graph: " + cert.refusal);
    int r = cert.cert.r;
    if (coloring.r != r || static_cast<int>(coloring.color_of.size()) != g.size())
        throw Error(Errc::PreconditionUnmet, "colouring does not match the graph");
    auto cls = coloring.classes();
    auto ms = enumerate_pms(g);
    if (ms.popcount(e1) != 1) throw Error(Errc::PreconditionUnmet, "first edge is not solitary");
    int c1 = coloring.color_of[e1];
    auto make = [&](std::vector<int> cols) {
        std::vector<EdgeId> keep;
        for (int c : cols) keep.insert(keep.end(), cls[c].begin(), cls[c].end());
        std::sort(cols.begin(), cols.end());
        return CubicCore{spanning(g, keep), cols};
    };
    if (r == 3) return make({0, 1, 2});
    if (e2 >= 0) {
        if (ms.popcount(e2) != 1) throw Error(Errc::PreconditionUnmet, "second edge is not solitary");
        if (ms.incidence[e1].intersects(ms.incidence[e2]))
            throw Error(Errc::PreconditionUnmet, "edges are not mutually exclusive");
        int c2 = coloring.color_of[e2];
        if (c1 == c2) throw Error(Errc::PreconditionUnmet, "edges share a colour class");
        if (chosen < 0)
            for (int c = 0; c < r && chosen < 0; ++c)
                if (c != c1 && c != c2) chosen = c;
        if (chosen == c1 || chosen == c2 || chosen >= r) throw Error(Errc::PreconditionUnmet, "bad third colour");
        return make({c1, c2, chosen});
    }
    if (!cert.cert.is_3ec) throw Error(Errc::PreconditionUnmet, "graph is not 3-edge-connected");
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (i == c1 || j == c1) continue;
            auto core = make({c1, i, j});
            if (is_k_connected(core.h.g, 3)) return core;
        }
    throw Error(Errc::PreconditionUnmet, "no 3-connected union of three colour classes");
}

}  // namespace mc
