#pragma once

#include <optional>
#include <vector>

#include "matchcov/graph.hpp"

namespace mc {

using PerfectMatching = std::vector<EdgeId>;  // ascending edge ids

struct MatchingSet {
    std::vector<PerfectMatching> matchings;  // lexicographic by edge-id list
    std::vector<Bits> incidence;             // per edge, bit j = edge in matching j

    std::size_t count() const { return matchings.size(); }
    std::size_t popcount(EdgeId e) const { return incidence[e].count(); }
};

inline constexpr int kEnumerationLimit = 20;

struct EnumerateOptions {
    int bound = kEnumerationLimit;
    bool unbounded = false;
};

MatchingSet enumerate_pms(const MultiGraph& g, EnumerateOptions opt = {});

// Backtracking without enumeration; cheap for the yes/no questions.
bool is_matchable(const MultiGraph& g);
// number of perfect matchings, stopping once `limit` is reached
long count_pms(const MultiGraph& g, long limit);
// some perfect matching containing e, if any
std::optional<PerfectMatching> matching_containing(const MultiGraph& g, EdgeId e);
bool is_perfect_matching(const MultiGraph& g, const std::vector<EdgeId>& m);

struct CoverResult {
    bool covered = false;
    std::optional<EdgeId> witness;  // an unmatchable edge when one exists
    std::string reason;
};
CoverResult is_matching_covered(const MultiGraph& g);
bool is_matching_double_covered(const MultiGraph& g);
std::vector<EdgeId> solitary_edges(const MultiGraph& g);
std::vector<EdgeId> solitary_edges(const MatchingSet& ms);
bool is_uniquely_matchable(const MultiGraph& g);

// Bridge f of a uniquely matchable graph with odd shores; f lies in the
// unique perfect matching.
EdgeId kotzig_1cut(const MultiGraph& g);
// every odd 1-cut of g (bridges whose shore within their component is odd)
std::vector<EdgeId> odd_1cuts(const MultiGraph& g);

struct CompanionCertificate {
    EdgeId solitary_edge;
    EdgeId companion;
    Cut cut_C;  // shore X holds the first listed end of the companion
    Cut cut_D;  // shore Y = V - X - {u, v}
    bool unique = true;
};

CompanionCertificate companion_of(const MultiGraph& g, EdgeId e);

}  // namespace mc
