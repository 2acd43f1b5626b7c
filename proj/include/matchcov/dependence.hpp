#pragma once

#include <utility>
#include <vector>

#include "matchcov/cuts.hpp"
#include "matchcov/matching.hpp"

namespace mc {

using SolitaryPattern = std::vector<int>;  // nonincreasing

struct DependenceAnalysis {
    std::vector<std::vector<EdgeId>> classes;  // by (size desc, smallest id asc)
    std::vector<int> class_of;
    // Hasse reduction; (a, b) means every matching containing class a
    // contains class b
    std::vector<std::pair<int, int>> poset_edges;
    std::vector<Bits> reach;  // reach[a].test(b): a depends on b (reflexive)
    std::vector<int> minimal;
    std::vector<int> removable;
    std::vector<int> solitary;
    SolitaryPattern pattern;
    int epsilon = 0;
    int epsilon_class = -1;

    bool class_depends(int a, int b) const { return reach[a].test(b); }
};

bool depends(const MatchingSet& ms, EdgeId e, EdgeId f);
bool mutually_exclusive(const MatchingSet& ms, EdgeId e, EdgeId f);

DependenceAnalysis analyze(const MultiGraph& g);
DependenceAnalysis analyze(const MultiGraph& g, const MatchingSet& ms);
SolitaryPattern solitary_pattern(const MultiGraph& g);
std::string pattern_string(const SolitaryPattern& p);

// How each class of g meets an even 2-cut C and what it becomes in one
// marked C-component.
struct ClassTransfer {
    int g_class;
    bool contains_cut;  // C is a subset of the class
    bool avoids_cut;    // C and the class are disjoint
    int side_class;     // class index in the component, -1 if nothing lands there
    bool consistent;    // the image is exactly one component class
};

struct CrossCutClasses {
    MarkedComponent component;
    DependenceAnalysis component_analysis;
    std::vector<ClassTransfer> transfer;
};

CrossCutClasses classes_across_2cut(const MultiGraph& g, const Cut& c, int side);

// Rebuild a class of g from a class of each marked component, both
// containing their marker edges: (D1 - e1) + (D2 - e2) + C, in g's ids.
std::vector<EdgeId> compose_across_2cut(const Cut& c, const MarkedComponent& a, const std::vector<EdgeId>& d1,
                                        const MarkedComponent& b, const std::vector<EdgeId>& d2);

}  // namespace mc
