#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matchcov/graph.hpp"

namespace mc {

// Named graphs.
MultiGraph theta();
MultiGraph k4();
MultiGraph c6bar();  // triangles {0,1,2} and {3,4,5}, matching 03, 14, 25
MultiGraph c4();
MultiGraph petersen();
MultiGraph r8();
MultiGraph r10();
MultiGraph n10();
MultiGraph c2(int m);  // two vertices, m parallel edges

enum class Base { theta, k4, c6bar, c4 };
const char* base_name(Base b);
MultiGraph base_graph(Base b);
// colour classes of the base's unique proper edge colouring
std::vector<std::vector<EdgeId>> base_classes(Base b);

// base plus (k_i - 1) extra copies of colour class i; at most `cap`
// multipliers may exceed one. C4 takes two multipliers, the rest three.
MultiGraph gen_multiplied(Base b, const std::vector<int>& ks, int cap);

struct Dumbbell {
    MultiGraph g;
    std::vector<EdgeId> rung_matching;  // rungs plus the odd-position bone edges
    std::vector<Vertex> sockets;
};

// k-dumbbell (k = 1 or 3) with ladders of orders a and b, thickness t
Dumbbell gen_dumbbell(int k, int a, int b, int t);
// every way of adding edges between the degree-deficient vertices that
// passes the staircase connectivity test
std::vector<MultiGraph> staircase_completions(int k, int a, int b, int t);

MultiGraph gen_staircase1(int n, int t);
MultiGraph gen_staircase1_split(int a, int b, int t);
MultiGraph gen_staircase3(int a, int b, int t);
// (a, b) with a <= b for the 3-staircases of order n
std::vector<std::pair<int, int>> staircase3_params(int n);

MultiGraph gen_family_S(int index);  // 1..5

struct DTrace {
    int a = 2, b = 6;             // base 3-staircase ladders, thickness one
    std::vector<Vertex> steps;  // splice vertices in order
};

// vertices eligible for the next splice step
std::vector<Vertex> family_D_eligible(const MultiGraph& g, bool first_step);
MultiGraph gen_family_D(const DTrace& t);
bool is_family_D(const MultiGraph& g);

// Construction tree for the family L. Leaves are two-vertex graphs or
// multigraphs on K4; internal nodes glue their children at the given edges.
struct LTrace {
    enum class Kind { c2, k4, glue } kind = Kind::c2;
    int m = 2;                       // c2: number of parallel edges
    std::vector<int> mult;           // k4: multiplicities of 01,23,02,13,03,12
    std::shared_ptr<LTrace> left, right;
    EdgeId e1 = 0, e2 = 0;
    bool crossed = false;

    static LTrace leaf_c2(int m);
    static LTrace leaf_k4(std::vector<int> mult);
    static LTrace join(LTrace l, EdgeId e1, LTrace r, EdgeId e2, bool crossed = false);
    std::string str() const;
};

LTrace parse_ltrace(const std::string& s);
MultiGraph gen_family_L(const LTrace& t);
MultiGraph gen_family_L_r(int r, const LTrace& t);
// peel even 2-cuts that lie inside half-order classes down to leaves;
// nullopt when g is not in the family
std::optional<LTrace> reconstruct_L_trace(const MultiGraph& g);

enum class Family {
    theta_i, k4_i, c4_i, c6bar_i, r8, r10, n10, staircase1, staircase3, family_S, family_D, family_L, family_L_r
};
const char* family_name(Family f);

struct FamilyMatch {
    Family family;
    std::vector<int> params;  // multipliers, (n, t), (a, b, t), index or r
    std::string label() const;
    // for multiplied families: number of multipliers above one
    int raised() const;
};

std::vector<FamilyMatch> recognize(const MultiGraph& g);
bool in_multiplied_family(const std::vector<FamilyMatch>& ms, Family f, int i);
bool has_family(const std::vector<FamilyMatch>& ms, Family f);

}  // namespace mc
