#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchcov/cuts.hpp"
#include "matchcov/dependence.hpp"
#include "matchcov/families.hpp"
#include "matchcov/rgraph.hpp"

namespace mc {

struct PieceReport {
    int node = -1;  // leaf index in the decomposition tree
    MultiGraph graph;
    RGraphResult rgraph;
    SolitaryPattern pattern;
    std::vector<FamilyMatch> families;
    std::optional<std::string> row;
};

struct ClassificationReport {
    RGraphResult rgraph;
    bool three_ec = false;
    bool matching_covered = false;
    std::string structure_note;  // set when the analysis could not run
    std::optional<DependenceAnalysis> analysis;
    SolitaryPattern pattern;
    std::vector<EdgeId> solitary;
    std::vector<FamilyMatch> family_matches;
    std::optional<std::string> theorem_row;
    bool row_consistent = true;  // family recognizers agree with the row
    std::optional<DecompositionTree> decomposition;
    std::vector<PieceReport> pieces;
    // solitary edges recomputed from the two sides of the first split
    std::optional<std::vector<EdgeId>> derived_solitary;
    bool derived_agrees = true;
};

// Row of the pattern table for a 3-edge-connected r-graph, if characterized.
std::optional<std::string> table_row(const SolitaryPattern& p, int r);
// whether the families found agree with the row for this pattern
bool row_matches(const SolitaryPattern& p, int r, const std::vector<FamilyMatch>& fams);
bool pattern_allowed(const SolitaryPattern& p, int r);

ClassificationReport classify(const MultiGraph& g);

// Perfect-matching counts of g derived from the marked components of an
// even 2-cut: matchings avoiding the cut pair up those avoiding both
// markers, matchings through the cut pair up those using both markers.
std::vector<long> pm_counts_across_2cut(const MultiGraph& g, const Cut& c);
// the two-part statement about a solitary class and a 2-cut of an r-graph
// with exactly one solitary class; true when the hypothesis fails
bool single_class_cut_rule_holds(const MultiGraph& g, const Cut& c);

enum class Theorem {
    solitary_bound,
    half_order_exceptions,
    decomposition_unique,
    two_doubletons,
    doubleton_singleton,
    three_singletons,
    exclusive_distance,
    singleton_distance,
    solitary_distance,
    pattern_two_family,
    half_class,
    deletion_unique,
    cut_parity,
    bridge_in_unique_matching,
    solitary_colorable,
    unique_coloring,
    solitary_class_count,
    two_classes_connected,
    solitary_brick,
    two_cut_in_solitary_matching,
    rainbow_bound,
    cross_cut_dependence,
};

const std::vector<Theorem>& all_theorems();
const char* theorem_id(Theorem t);
std::optional<Theorem> theorem_from_id(const std::string& id);

struct Violation {
    std::size_t index;  // position in the corpus
    MultiGraph graph;
    std::string message;
};

struct VerifyReport {
    Theorem theorem;
    std::size_t checked = 0;  // graphs examined
    std::size_t applied = 0;  // graphs meeting the hypothesis
    std::size_t skipped = 0;  // over a size bound
    std::vector<Violation> violations;
};

struct VerifyOptions {
    int shuffles = 5;
    unsigned seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency
};

VerifyReport verify(Theorem t, const std::vector<MultiGraph>& corpus, VerifyOptions opt = {});

// Connected loopless r-regular multigraphs of order up to max_n, one per
// isomorphism class, ordered by order then canonical form.
std::vector<MultiGraph> exhaustive_small_corpus(int max_n, int r);
// Generated members of the named families up to the given order and
// thickness.
std::vector<MultiGraph> family_corpus(int max_n, int max_t);

}  // namespace mc
