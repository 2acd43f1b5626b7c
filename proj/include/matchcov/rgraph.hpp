#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matchcov/graph.hpp"
#include "matchcov/matching.hpp"

namespace mc {

struct RGraphCertificate {
    int r = 0;
    int min_odd_cut = 0;
    bool is_3ec = false;
    bool regular = false;
};

// Refusal is a value: ok == false with a reason and, where it applies, a
// violating odd shore or a vertex of unexpected degree.
struct RGraphResult {
    bool ok = false;
    RGraphCertificate cert;
    std::string refusal;
    std::optional<VertexSet> violating_shore;
    std::optional<Vertex> degree_anomaly;
};

RGraphResult certify_rgraph(const MultiGraph& g);
inline bool is_rgraph(const MultiGraph& g) { return certify_rgraph(g).ok; }

struct OddCut {
    int value;
    VertexSet shore;
};

// Shore scan up to kShoreScanLimit, Gomory-Hu tree above it.
OddCut min_odd_cut(const MultiGraph& g);
OddCut min_odd_cut_gomory_hu(const MultiGraph& g);

struct EdgeColoring {
    int r = 0;
    std::vector<int> color_of;
    std::vector<std::vector<EdgeId>> classes() const;
};

std::optional<EdgeColoring> r_edge_coloring(const MultiGraph& g, int r);
// proper r-edge-colourings counted up to colour permutation, stopping at limit
long count_edge_colorings(const MultiGraph& g, int r, long limit);

MultiGraph multiply_matching(const MultiGraph& g, const PerfectMatching& m, int k);

using Triangle = std::array<Vertex, 3>;
std::vector<Triangle> rainbow_triangles(const MultiGraph& g, int r);

struct CubicCore {
    Subgraph h;  // spanning; edge_origin maps back into g
    std::vector<int> colors;
};

// With e2 >= 0: union of the colour classes of e1, e2 and `chosen` (the
// lowest remaining colour when chosen < 0). With e2 < 0: search pairs of
// further colours for a 3-connected union with the class of e1.
CubicCore cubic_core_for_pair(const MultiGraph& g, const EdgeColoring& coloring, EdgeId e1, EdgeId e2,
                              int chosen = -1);

}  // namespace mc
