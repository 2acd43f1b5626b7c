#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchcov/bits.hpp"
#include "matchcov/error.hpp"

namespace mc {

using Vertex = int;
using EdgeId = int;
using VertexSet = Bits;

struct Edge {
    EdgeId id;
    Vertex u, v;
    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool touches(Vertex x) const { return u == x || v == x; }
};

// Loopless multigraph. Parallel edges are separate records; edge ids are
// dense and follow insertion order.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n);
    MultiGraph(int n, const std::vector<std::pair<int, int>>& edges);

    EdgeId add_edge(Vertex u, Vertex v);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeId>& incident(Vertex v) const { return inc_[v]; }
    int degree(Vertex v) const { return static_cast<int>(inc_[v].size()); }
    int multiplicity(Vertex u, Vertex v) const;
    std::vector<std::pair<int, int>> endpoint_list() const;

    // r if every vertex has degree r, else -1 (0 for the null graph)
    int regular_degree() const;
    VertexSet all_vertices() const { return Bits::full(static_cast<std::size_t>(n_)); }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.n_ == b.n_ && a.endpoint_list() == b.endpoint_list();
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> inc_;
};

// A derived graph with maps back to its parent.
struct Subgraph {
    MultiGraph g;
    std::vector<Vertex> vertex_origin;  // new vertex -> parent vertex
    std::vector<EdgeId> edge_origin;    // new edge -> parent edge
};

Subgraph delete_vertices(const MultiGraph& g, const VertexSet& drop);
Subgraph delete_edges(const MultiGraph& g, const std::vector<EdgeId>& drop);
Subgraph induced(const MultiGraph& g, const VertexSet& keep);
// spanning subgraph on the given edges (vertex ids unchanged)
Subgraph spanning(const MultiGraph& g, const std::vector<EdgeId>& keep);

enum class Parity { even, odd };

struct Cut {
    VertexSet shore;
    VertexSet co_shore;
    std::vector<EdgeId> edge_ids;  // ascending
    Parity parity = Parity::even;
    bool is_trivial = false;
    bool is_bond = false;
    int size() const { return static_cast<int>(edge_ids.size()); }
};

Cut cut_of(const MultiGraph& g, const VertexSet& x);
Cut cut_of_mask(const MultiGraph& g, std::uint64_t mask);
std::vector<EdgeId> boundary(const MultiGraph& g, const VertexSet& x);

struct Quadrants {
    VertexSet xy, x_ny, nx_y, nx_ny;
    bool laminar;
};
Quadrants quadrants(const MultiGraph& g, const Cut& c, const Cut& d);

bool is_connected(const MultiGraph& g);
// connected when restricted to `keep` (an empty set counts as disconnected)
bool is_connected_on(const MultiGraph& g, const VertexSet& keep);
// component index per vertex; returns number of components
int components(const MultiGraph& g, std::vector<int>& comp);
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);
std::vector<EdgeId> bridges(const MultiGraph& g);

// Shore scans run up to this order; above it flow methods take over.
inline constexpr int kShoreScanLimit = 20;

// min |d(X)| over proper nonempty X; 0 for n <= 1
int edge_connectivity(const MultiGraph& g);
int edge_connectivity_flow(const MultiGraph& g);
int max_flow_value(const MultiGraph& g, Vertex s, Vertex t);
// max flow with unit edge capacities; source_side gets the residual-reachable set
int min_st_cut(const MultiGraph& g, Vertex s, Vertex t, VertexSet& source_side);
bool is_k_edge_connected(const MultiGraph& g, int k);

// Vertex connectivity of the underlying graph, capped at `cap`. Convention:
// a two-vertex graph has connectivity equal to its edge multiplicity, so
// theta counts as 3-connected.
int vertex_connectivity(const MultiGraph& g, int cap = 4);
bool is_k_connected(const MultiGraph& g, int k);

int edge_distance(const MultiGraph& g, EdgeId e1, EdgeId e2);
// distance from a vertex to the nearer end of an edge
int vertex_edge_distance(const MultiGraph& g, Vertex x, EdgeId e);
std::vector<int> bfs_distances(const MultiGraph& g, const std::vector<Vertex>& sources);

inline constexpr int kCanonicalLimit = 16;

// Isomorphism-invariant byte string; multiplicities respected.
std::string canonical_form(const MultiGraph& g);
// relabelling achieving the canonical form: perm[v] = new label
std::vector<int> canonical_labeling(const MultiGraph& g);
bool isomorphic(const MultiGraph& a, const MultiGraph& b);
MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm);

}  // namespace mc
