#include "matchcov/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace mc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DisconnectedGraph: return "DisconnectedGraph";
        case Errc::Unreachable: return "Unreachable";
        case Errc::TooLarge: return "TooLarge";
        case Errc::OddOrder: return "OddOrder";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::NoPerfectMatching: return "NoPerfectMatching";
        case Errc::NotUniquelyMatchable: return "NotUniquelyMatchable";
        case Errc::NotSolitary: return "NotSolitary";
        case Errc::NotRGraph: return "NotRGraph";
        case Errc::OrderTooSmall: return "OrderTooSmall";
        case Errc::UnmatchableEdge: return "UnmatchableEdge";
        case Errc::NotMatchingCovered: return "NotMatchingCovered";
        case Errc::NotEven2Cut: return "NotEven2Cut";
        case Errc::NotTwoConnected: return "NotTwoConnected";
        case Errc::EmptyOrFullShore: return "EmptyOrFullShore";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::NotRegular: return "NotRegular";
        case Errc::NotPerfectMatching: return "NotPerfectMatching";
        case Errc::PreconditionUnmet: return "PreconditionUnmet";
        case Errc::CapViolated: return "CapViolated";
        case Errc::BadOrder: return "BadOrder";
        case Errc::BadLadder: return "BadLadder";
        case Errc::BadIndex: return "BadIndex";
        case Errc::BadParams: return "BadParams";
        case Errc::IneligibleVertex: return "IneligibleVertex";
        case Errc::BadGlueEdge: return "BadGlueEdge";
        case Errc::Bipartite: return "Bipartite";
        case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

MultiGraph::MultiGraph(int n) : n_(n), inc_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error(Errc::BadParams, "negative order");
}

MultiGraph::MultiGraph(int n, const std::vector<std::pair<int, int>>& edges) : MultiGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

EdgeId MultiGraph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error(Errc::BadParams, "edge endpoint out of range");
    if (u == v) throw Error(Errc::BadParams, "loops are not allowed");
    EdgeId id = size();
    edges_.push_back({id, u, v});
    inc_[u].push_back(id);
    inc_[v].push_back(id);
    return id;
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
    int c = 0;
    for (EdgeId e : inc_[u])
        if (edges_[e].other(u) == v) ++c;
    return c;
}

std::vector<std::pair<int, int>> MultiGraph::endpoint_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
}

int MultiGraph::regular_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return -1;
    return d;
}

Subgraph induced(const MultiGraph& g, const VertexSet& keep) {
    Subgraph s;
    std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v)
        if (keep.test(v)) {
            idx[v] = static_cast<int>(s.vertex_origin.size());
            s.vertex_origin.push_back(v);
        }
    s.g = MultiGraph(static_cast<int>(s.vertex_origin.size()));
    for (auto& e : g.edges())
        if (idx[e.u] >= 0 && idx[e.v] >= 0) {
            s.g.add_edge(idx[e.u], idx[e.v]);
            s.edge_origin.push_back(e.id);
        }
    return s;
}

Subgraph delete_vertices(const MultiGraph& g, const VertexSet& drop) { return induced(g, ~drop); }

Subgraph delete_edges(const MultiGraph& g, const std::vector<EdgeId>& drop) {
    std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId e : drop) gone[e] = 1;
    std::vector<EdgeId> keep;
    for (auto& e : g.edges())
        if (!gone[e.id]) keep.push_back(e.id);
    return spanning(g, keep);
}

Subgraph spanning(const MultiGraph& g, const std::vector<EdgeId>& keep) {
    Subgraph s;
    s.g = MultiGraph(g.order());
    s.vertex_origin.resize(static_cast<std::size_t>(g.order()));
    std::iota(s.vertex_origin.begin(), s.vertex_origin.end(), 0);
    std::vector<EdgeId> ids = keep;
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids) {
        s.g.add_edge(g.edge(e).u, g.edge(e).v);
        s.edge_origin.push_back(e);
    }
    return s;
}

std::vector<EdgeId> boundary(const MultiGraph& g, const VertexSet& x) {
    std::vector<EdgeId> out;
    for (auto& e : g.edges())
        if (x.test(e.u) != x.test(e.v)) out.push_back(e.id);
    return out;
}

Cut cut_of(const MultiGraph& g, const VertexSet& x) {
    Cut c;
    c.shore = x;
    c.co_shore = ~x;
    c.edge_ids = boundary(g, x);
    std::size_t a = x.count(), b = static_cast<std::size_t>(g.order()) - a;
    c.parity = (a % 2 == 0 && b % 2 == 0) ? Parity::even : Parity::odd;
    c.is_trivial = (a == 1 || b == 1);
    c.is_bond = !c.edge_ids.empty() && is_connected_on(g, c.shore) && is_connected_on(g, c.co_shore);
    return c;
}

Cut cut_of_mask(const MultiGraph& g, std::uint64_t mask) {
    return cut_of(g, Bits::from_mask(static_cast<std::size_t>(g.order()), mask));
}

Quadrants quadrants(const MultiGraph& g, const Cut& c, const Cut& d) {
    (void)g;
    Quadrants q{c.shore & d.shore, c.shore & d.co_shore, c.co_shore & d.shore, c.co_shore & d.co_shore,
                false};
    q.laminar = q.xy.none() || q.x_ny.none() || q.nx_y.none() || q.nx_ny.none();
    return q;
}

bool is_connected_on(const MultiGraph& g, const VertexSet& keep) {
    std::size_t s = keep.first();
    if (s >= static_cast<std::size_t>(g.order())) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(x)) {
            int y = g.edge(e).other(x);
            if (keep.test(y) && !seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == keep.count();
}

bool is_connected(const MultiGraph& g) { return is_connected_on(g, g.all_vertices()); }

int components(const MultiGraph& g, std::vector<int>& comp) {
    comp.assign(static_cast<std::size_t>(g.order()), -1);
    int k = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = k;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                int y = g.edge(e).other(x);
                if (comp[y] < 0) {
                    comp[y] = k;
                    stack.push_back(y);
                }
            }
        }
        ++k;
    }
    return k;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const MultiGraph& g) {
    std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<int> side(n, -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(x)) {
                int y = g.edge(e).other(x);
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    q.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a(n), b(n);
    for (std::size_t v = 0; v < n; ++v) side[v] == 0 ? a.set(v) : b.set(v);
    return std::make_pair(a, b);
}

bool is_bipartite(const MultiGraph& g) { return bipartition(g).has_value(); }

std::vector<EdgeId> bridges(const MultiGraph& g) {
    int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> out;
    int t = 0;
    // iterative dfs: frame = (vertex, parent edge, next incidence index)
    struct Frame {
        int v;
        EdgeId via;
        std::size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = t++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < g.incident(f.v).size()) {
                EdgeId e = g.incident(f.v)[f.i++];
                if (e == f.via) continue;
                int y = g.edge(e).other(f.v);
                if (disc[y] < 0) {
                    disc[y] = low[y] = t++;
                    st.push_back({y, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[y]);
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p]) out.push_back(done.via);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int max_flow_value(const MultiGraph& g, Vertex s, Vertex t) {
    VertexSet side;
    return min_st_cut(g, s, t, side);
}

int min_st_cut(const MultiGraph& g, Vertex s, Vertex t, VertexSet& source_side) {
    std::vector<int> flow(static_cast<std::size_t>(g.size()), 0);  // +1 means u->v
    int total = 0;
    std::size_t n = static_cast<std::size_t>(g.order());
    for (;;) {
        std::vector<EdgeId> via(n, -1);
        std::vector<char> seen(n, 0);
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int x = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(x)) {
                const Edge& ed = g.edge(e);
                int y = ed.other(x);
                int room = (x == ed.u) ? 1 - flow[e] : 1 + flow[e];
                if (room > 0 && !seen[y]) {
                    seen[y] = 1;
                    via[y] = e;
                    q.push_back(y);
                }
            }
        }
        if (!seen[t]) {
            source_side = VertexSet(n);
            for (std::size_t v = 0; v < n; ++v)
                if (seen[v]) source_side.set(v);
            return total;
        }
        for (int y = t; y != s;) {
            const Edge& ed = g.edge(via[y]);
            int x = ed.other(y);
            flow[ed.id] += (x == ed.u) ? 1 : -1;
            y = x;
        }
        ++total;
    }
}

int edge_connectivity_flow(const MultiGraph& g) {
    if (!is_connected(g)) throw Error(Errc::DisconnectedGraph, "edge connectivity of a disconnected graph");
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.order(); ++t) best = std::min(best, max_flow_value(g, 0, t));
    return g.order() <= 1 ? 0 : best;
}

int edge_connectivity(const MultiGraph& g) {
    if (!is_connected(g)) throw Error(Errc::DisconnectedGraph, "edge connectivity of a disconnected graph");
    int n = g.order();
    if (n <= 1) return 0;
    if (n > kShoreScanLimit) return edge_connectivity_flow(g);
    int best = std::numeric_limits<int>::max();
    // X ranges over nonempty subsets of {1..n-1}; its complement holds vertex 0
    std::uint32_t lim = 1u << (n - 1);
    for (std::uint32_t m = 1; m < lim; ++m) {
        std::uint32_t x = m << 1;
        int c = 0;
        for (auto& e : g.edges()) c += ((x >> e.u) ^ (x >> e.v)) & 1u;
        best = std::min(best, c);
    }
    return best;
}

bool is_k_edge_connected(const MultiGraph& g, int k) {
    if (!is_connected(g)) return false;
    return g.order() <= 1 || edge_connectivity(g) >= k;
}

int vertex_connectivity(const MultiGraph& g, int cap) {
    int n = g.order();
    if (n <= 1) return 0;
    if (n == 2) return std::min(cap, g.multiplicity(0, 1));
    if (!is_connected(g)) return 0;
    auto disconnects = [&](const std::vector<int>& s) {
        VertexSet keep = g.all_vertices();
        for (int v : s) keep.reset(v);
        return !is_connected_on(g, keep);
    };
    for (int k = 1; k < cap && k <= n - 2; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            if (disconnects(pick)) return k;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::min(cap, n - 1);
}

bool is_k_connected(const MultiGraph& g, int k) { return vertex_connectivity(g, k) >= k; }

std::vector<int> bfs_distances(const MultiGraph& g, const std::vector<Vertex>& sources) {
    std::vector<int> d(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> q;
    for (int s : sources)
        if (d[s] < 0) {
            d[s] = 0;
            q.push_back(s);
        }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (EdgeId e : g.incident(x)) {
            int y = g.edge(e).other(x);
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    return d;
}

int edge_distance(const MultiGraph& g, EdgeId e1, EdgeId e2) {
    if (e1 == e2) throw Error(Errc::BadParams, "edge_distance needs two distinct edges");
    auto d = bfs_distances(g, {g.edge(e1).u, g.edge(e1).v});
    int a = d[g.edge(e2).u], b = d[g.edge(e2).v];
    if (a < 0 && b < 0) throw Error(Errc::Unreachable, "no path between the edges");
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}

int vertex_edge_distance(const MultiGraph& g, Vertex x, EdgeId e) {
    auto d = bfs_distances(g, {x});
    int a = d[g.edge(e).u], b = d[g.edge(e).v];
    if (a < 0 && b < 0) throw Error(Errc::Unreachable, "no path to the edge");
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
    MultiGraph h(g.order());
    for (auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

namespace {

// Individualisation-refinement search. Colours are cell start positions, so
// a discrete colouring is directly a relabelling.
class Canon {
public:
    explicit Canon(const MultiGraph& g) : n_(g.order()), a_(static_cast<std::size_t>(n_ * n_), 0) {
        for (auto& e : g.edges()) {
            ++a_[static_cast<std::size_t>(e.u * n_ + e.v)];
            ++a_[static_cast<std::size_t>(e.v * n_ + e.u)];
        }
    }

    void run() {
        std::vector<int> col(static_cast<std::size_t>(n_), 0);
        std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            int deg = 0, loops = 0;
            for (int w = 0; w < n_; ++w) deg += at(v, w), loops += at(v, w) > 1;
            key[v] = {deg, loops};
        }
        recolour(col, key);
        std::vector<int> path;
        search(col, path);
    }

    std::string best;
    std::vector<int> best_perm;

private:
    int at(int u, int v) const { return a_[static_cast<std::size_t>(u * n_ + v)]; }

    // new colour = position of first vertex with the same (colour, key)
    int recolour(std::vector<int>& col, const std::vector<std::vector<int>>& key) {
        std::vector<int> order(static_cast<std::size_t>(n_));
        std::iota(order.begin(), order.end(), 0);
        auto less = [&](int x, int y) {
            if (col[x] != col[y]) return col[x] < col[y];
            return key[x] < key[y];
        };
        std::sort(order.begin(), order.end(), less);
        std::vector<int> next(static_cast<std::size_t>(n_));
        int cells = 0;
        for (int i = 0; i < n_; ++i) {
            if (i == 0 || less(order[i - 1], order[i])) {
                ++cells;
                next[order[i]] = i;
            } else {
                next[order[i]] = next[order[i - 1]];
            }
        }
        col = next;
        return cells;
    }

    void refine(std::vector<int>& col) {
        int cells = -1;
        for (;;) {
            std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                auto& k = key[v];
                for (int w = 0; w < n_; ++w)
                    if (at(v, w)) k.push_back(col[w] * 256 + at(v, w));
                std::sort(k.begin(), k.end());
            }
            int c = recolour(col, key);
            if (c == cells) return;
            cells = c;
        }
    }

    void leaf(const std::vector<int>& col) {
        std::vector<int> inv(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inv[col[v]] = v;
        std::string s;
        s.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2 + 1));
        s.push_back(static_cast<char>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) s.push_back(static_cast<char>(at(inv[i], inv[j])));
        if (best_perm.empty() || s < best) {
            best = s;
            best_perm = col;
        } else if (s == best) {
            // col o best^-1 is an automorphism
            std::vector<int> binv(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) binv[best_perm[v]] = v;
            std::vector<int> aut(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) aut[v] = binv[col[v]];
            auts_.push_back(aut);
        }
    }

    void search(std::vector<int> col, std::vector<int>& path) {
        refine(col);
        // pick the smallest nonsingleton cell, earliest position on ties
        std::vector<int> size(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) ++size[col[v]];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
        if (target < 0) {
            leaf(col);
            return;
        }
        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (col[v] == target) cell.push_back(v);
        std::vector<int> tried;
        for (int v : cell) {
            if (in_orbit_of_tried(v, tried, path)) continue;
            tried.push_back(v);
            std::vector<int> c2 = col;
            for (int u : cell)
                if (u != v) c2[u] = target + 1;
            path.push_back(v);
            search(c2, path);
            path.pop_back();
        }
    }

    // orbit test under found automorphisms fixing the current path pointwise
    bool in_orbit_of_tried(int v, const std::vector<int>& tried, const std::vector<int>& path) const {
        if (tried.empty() || auts_.empty()) return false;
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto& a : auts_) {
            bool fixes = true;
            for (int p : path)
                if (a[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) parent[find(x)] = find(a[x]);
        }
        for (int t : tried)
            if (find(t) == find(v)) return true;
        return false;
    }

    int n_;
    std::vector<int> a_;
    std::vector<std::vector<int>> auts_;
};

}  // namespace

std::vector<int> canonical_labeling(const MultiGraph& g) {
    if (g.order() > kCanonicalLimit)
        throw Error(Errc::TooLarge, "canonical form is bounded to order " + std::to_string(kCanonicalLimit));
    if (g.order() == 0) return {};
    Canon c(g);
    c.run();
    return c.best_perm;
}

std::string canonical_form(const MultiGraph& g) {
    if (g.order() > kCanonicalLimit)
        throw Error(Errc::TooLarge, "canonical form is bounded to order " + std::to_string(kCanonicalLimit));
    if (g.order() == 0) return std::string(1, '\0');
    Canon c(g);
    c.run();
    return c.best;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace mc
