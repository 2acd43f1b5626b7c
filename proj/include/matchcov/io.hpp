#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "matchcov/classifier.hpp"

namespace mc {

// edgelist-m: header "n m", then m lines "u v"; '#' starts a comment.
// Parse errors carry the 1-based line number.
MultiGraph parse_edgelist(std::istream& in);
MultiGraph parse_edgelist(const std::string& text);
void write_edgelist(std::ostream& out, const MultiGraph& g, const std::string& comment = "");
std::string edgelist_string(const MultiGraph& g);

// sparse6, with or without the ">>sparse6<<" header; loops are rejected
MultiGraph parse_sparse6(const std::string& s);
std::string to_sparse6(const MultiGraph& g);

// chooses the format from the content: a leading ':' or the header means sparse6
MultiGraph parse_graph_text(const std::string& text);
MultiGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const MultiGraph& g, const std::string& comment = "");

using Json = nlohmann::ordered_json;

Json to_json(const MultiGraph& g);
Json to_json(const MultiGraph& g, const MatchingSet& ms, const DependenceAnalysis& da);
Json to_json(const RGraphResult& r);
Json to_json(const EdgeColoring& c);
Json to_json(const DecompositionTree& t);
Json to_json(const FamilyMatch& m);
Json to_json(const ClassificationReport& r);
Json to_json(const VerifyReport& r);

}  // namespace mc
