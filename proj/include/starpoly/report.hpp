#pragma once
// One-stop analysis of a single cyclic presentation and its serializations.
// The JSON layout is the machine contract: key order is fixed, unknown and
// inapplicable values are null (girth/diameter of graphs without them, the
// gcd d of an alternating word, C when no piece bounds it, T outside its
// precondition, largeness of a redundant presentation).

#include <string>

#include "json.hpp"
#include "starpoly/classifier.hpp"
#include "starpoly/gen_polygon.hpp"
#include "starpoly/graph.hpp"
#include "starpoly/small_cancellation.hpp"
#include "starpoly/star_graph.hpp"
#include "starpoly/word.hpp"

namespace starpoly {

struct AnalysisReport {
  CyclicPresentation presentation;
  SubscriptMultisets multisets;  // of the full defining word
  StarGraph star;                // generic construction
  GraphProfile profile;
  std::vector<PolygonVerdict> component_verdicts;  // by component id
  PieceReport pieces;
  TParameter t;
  SpecialityReport speciality;  // closed form when one applies, else direct
  std::optional<LargenessFlags> largeness;  // empty when redundant
};

// Runs every analysis. When a closed form applies its verdict is
// cross-checked against the direct one and a mismatch throws
// std::logic_error; the reported method names the closed form.
AnalysisReport analyze_presentation(const CyclicPresentation& p);
AnalysisReport analyze_presentation(int n, const std::string& word_text);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace starpoly
