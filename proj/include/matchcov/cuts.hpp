#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matchcov/graph.hpp"

namespace mc {

// One side of an even 2-cut {f, f'} plus a marker edge joining the end of
// f on this side to the end of f' on this side. The marker is the last edge.
struct MarkedComponent {
    MultiGraph graph;
    EdgeId marker_edge = -1;
    std::vector<Vertex> vertex_origin;  // component vertex -> parent vertex
    std::vector<EdgeId> edge_origin;    // component edge -> parent edge, -1 for the marker
    EdgeId f = -1, f_prime = -1;        // parent edges the marker stands for
};

// All 2-cuts with both shores even, each once, shore taken as the side
// holding vertex 0. Sorted by edge ids, then shore.
std::vector<Cut> find_even_2cuts(const MultiGraph& g);

std::pair<MarkedComponent, MarkedComponent> marked_components(const MultiGraph& g, const Cut& c);

// Result keeps g1's vertices, then g2's shifted by n1. Edges: g1 - e1,
// g2 - e2, then f = u1u2 and f' = v1v2 as the last two edges (u1v2 and
// v1u2 when crossed).
MultiGraph glue(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, EdgeId e2, bool crossed = false);

struct DecompositionNode {
    MultiGraph graph;
    std::optional<Cut> cut;  // set on internal nodes
    int child[2] = {-1, -1};
    int parent = -1;
    std::optional<MarkedComponent> origin;  // how this node sits inside its parent
};

struct DecompositionTree {
    std::vector<DecompositionNode> nodes;  // nodes[0] is the root
    const MultiGraph& root() const { return nodes[0].graph; }
    std::vector<int> leaf_ids() const;
    std::vector<MultiGraph> leaves() const;
};

// Splits on the first even 2-cut, or on a uniformly random one when rng is
// given, until no piece has an even 2-cut.
DecompositionTree decompose_2cuts(const MultiGraph& g, std::mt19937* rng = nullptr);
std::vector<std::string> leaf_multiset(const DecompositionTree& t);

struct Contraction {
    MultiGraph g;
    Vertex contraction_vertex = -1;
    std::vector<Vertex> vertex_map;    // old vertex -> new vertex
    std::vector<EdgeId> edge_origin;   // new edge -> old edge
    std::vector<EdgeId> deleted_inner; // edges with both ends in the shore
    bool shore_disconnected = false;
};

// G/X: vertices outside X keep their relative order, X becomes the last vertex.
Contraction contract(const MultiGraph& g, const VertexSet& x);

// pi pairs each edge at v1 with an edge at v2.
MultiGraph splice(const MultiGraph& g1, Vertex v1, const MultiGraph& g2, Vertex v2,
                  const std::vector<std::pair<EdgeId, EdgeId>>& pi);
// pairs the edges at v1 and v2 in ascending id order
MultiGraph splice(const MultiGraph& g1, Vertex v1, const MultiGraph& g2, Vertex v2);
// Splicing with K4 at a degree-3 vertex v: v keeps its lowest edge, two new
// vertices n and n+1 take the other two, and a triangle joins v, n, n+1.
MultiGraph splice_k4(const MultiGraph& g, Vertex v);

bool is_separating_cut(const MultiGraph& g, const Cut& c);
// every edge lies in a perfect matching meeting the cut once
bool is_separating_by_matchings(const MultiGraph& g, const Cut& c);
bool is_tight_cut(const MultiGraph& g, const Cut& c);

enum class BrickBraceKind { brick, brace, has_nontrivial_tight_cut, not_matching_covered };
const char* kind_name(BrickBraceKind k);

struct BrickBraceVerdict {
    BrickBraceKind kind;
    std::optional<Cut> witness;
};

inline constexpr int kTightCutScanLimit = 16;

BrickBraceVerdict classify_brick_brace(const MultiGraph& g);
bool is_bicritical(const MultiGraph& g);

struct NearBipartiteWitness {
    std::vector<EdgeId> removed;  // the doubleton {alpha, beta}
    VertexSet a, b;               // colour classes of g - removed, alpha inside a when possible
    bool lovasz_ok = false;       // alpha's ends in a, beta's ends in b, |a| = |b|
};

std::optional<NearBipartiteWitness> near_bipartite_witness(const MultiGraph& g);

}  // namespace mc
