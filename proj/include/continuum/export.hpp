#pragma once

#include <string>

#include <json.hpp>

#include "continuum/analysis.hpp"
#include "continuum/complex.hpp"
#include "continuum/function.hpp"
#include "continuum/level_graph.hpp"

namespace continuum {

/// DOT export with nodes labeled by their dot-notation words and an
/// "origin" attribute per edge. Node and edge order is canonical, so equal
/// graphs serialize to identical bytes.
std::string graph_to_dot(const LevelGraph& graph, const AdjacencyPattern& pattern);

/// JSON export: {"depth": k, "nodes": [...], "edges": [[i, j], ...]} with
/// nodes in lexicographic order and edges sorted.
nlohmann::ordered_json graph_to_json(const LevelGraph& graph, const AdjacencyPattern& pattern);

std::string tree_to_dot(const ShapeTree& tree);
nlohmann::ordered_json tree_to_json(const ShapeTree& tree);

nlohmann::ordered_json segment_map_to_json(const SegmentMap& map, const Complex& cx);

nlohmann::ordered_json refinement_report_to_json(const RefinementReport& report,
                                                 const AdjacencyPattern& pattern);
nlohmann::ordered_json connectivity_report_to_json(const ConnectivityReport& report);
nlohmann::ordered_json property_report_to_json(const PropertyReport& report);
nlohmann::ordered_json function_report_to_json(const FunctionReport& report,
                                               const CellFunction& f);
nlohmann::ordered_json witness_to_json(const BrouwerWitness& witness, const CellFunction& f);
nlohmann::ordered_json census_to_json(const BorderCensus& census, int depth);

} // namespace continuum
