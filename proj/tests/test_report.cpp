#include <string>
#include <vector>

#include "doctest.h"
#include "starpoly/report.hpp"

using namespace starpoly;
using nlohmann::ordered_json;

TEST_SUITE("report") {

TEST_CASE("text rendering of the order-2 plane presentation") {
  AnalysisReport r = analyze_presentation(7, "x0 x1 x3");
  CHECK(report_to_text(r) ==
        "P_7(x0 x1 x3)\n"
        "flags: positive, irreducible, non-redundant, not a proper power\n"
        "multisets: A={} B={} Q={1, 2, 4} sigma=3 dA=7 dB=7 d=1\n"
        "star graph: 14 vertices, 21 edges, 3-regular, girth 6, diameter 3, 1 component\n"
        "component 0: projective plane of order 2 (generalized 3-gon), parts 7+7\n"
        "pieces: max length 1 against relator length 3; C certified up to C(3); T(6)\n"
        "speciality: SPECIAL(3,3,1) [theorem:positive_m3]\n"
        "largeness: delta=1 sigma=3 large=no\n");
}

TEST_CASE("json layout and values") {
  ordered_json j = report_to_json(analyze_presentation(7, "x0 x1 x3"));

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "word", "flags", "multisets", "graph",
                                         "component_verdicts", "small_cancellation",
                                         "speciality", "largeness"});

  CHECK(j["n"] == 7);
  CHECK(j["word"] == "x0 x1 x3");
  CHECK(j["flags"]["irreducible"] == true);
  CHECK(j["flags"]["redundant"] == false);
  CHECK(j["flags"]["proper_power"] == false);
  CHECK(j["flags"]["sign_class"] == "positive");
  CHECK(j["multisets"]["A"] == ordered_json::array());
  CHECK(j["multisets"]["Q"] == ordered_json({1, 2, 4}));
  CHECK(j["multisets"]["Qplus"] == ordered_json({1, 2, 4}));
  CHECK(j["multisets"]["Qminus"] == ordered_json::array());
  CHECK(j["multisets"]["d"] == 1);
  CHECK(j["multisets"]["dA"] == 7);
  CHECK(j["multisets"]["sigma"] == 3);
  CHECK(j["graph"] ==
        ordered_json{{"vertices", 14}, {"edges", 21}, {"girth", 6}, {"diameter", 3},
                     {"regular_degree", 3}, {"components", 1}});
  REQUIRE(j["component_verdicts"].size() == 1);
  const ordered_json& c = j["component_verdicts"][0];
  CHECK(c["kind"] == "projective_plane");
  CHECK(c["m"] == 3);
  CHECK(c["part_sizes"] == ordered_json({7, 7}));
  CHECK(c["plane_order"] == 2);
  CHECK(c["failure"].is_null());
  CHECK(j["small_cancellation"] ==
        ordered_json{{"max_piece", 1}, {"C", 3}, {"T", 6}, {"advisory", false}});
  CHECK(j["speciality"]["verdict"] == "SPECIAL(3,3,1)");
  CHECK(j["speciality"]["special"] == true);
  CHECK(j["speciality"]["m"] == 3);
  CHECK(j["speciality"]["k"] == 3);
  CHECK(j["speciality"]["nu"] == 1);
  CHECK(j["speciality"]["method"] == "theorem:positive_m3");
  CHECK(j["speciality"]["reason"].is_null());
  CHECK(j["largeness"] == ordered_json{{"delta", 1}, {"sigma", 3}, {"large", false}});
}

TEST_CASE("the two analyze overloads produce identical reports") {
  ordered_json a = report_to_json(analyze_presentation(make_presentation(13, "x0 x0 x1 x4")));
  ordered_json b = report_to_json(analyze_presentation(13, "x0 x0 x1 x4"));
  CHECK(a.dump() == b.dump());
  CHECK(b["speciality"]["verdict"] == "SPECIAL(3,4,1)");
  CHECK(b["component_verdicts"][0]["plane_order"] == 3);
}

TEST_CASE("redundant presentation: deduplicated relators, no largeness verdict") {
  AnalysisReport r = analyze_presentation(6, "x0 x1 x3 x4");
  CHECK(r.presentation.redundant);
  CHECK(!r.largeness.has_value());

  // three distinct relators only, so the star graph is a single 12-cycle
  ordered_json j = report_to_json(r);
  CHECK(j["graph"] ==
        ordered_json{{"vertices", 12}, {"edges", 12}, {"girth", 12}, {"diameter", 6},
                     {"regular_degree", 2}, {"components", 1}});
  CHECK(j["largeness"].is_null());
  CHECK(j["speciality"]["method"] == "direct");
  CHECK(j["speciality"]["special"] == false);
  CHECK(j["speciality"]["m"].is_null());
  CHECK(j["speciality"]["nu"].is_null());
  CHECK(j["speciality"]["reason"] ==
        "component 0: not a generalized polygon (minimum degree below 3)");
  CHECK(j["component_verdicts"][0]["kind"] == "not_polygon");
  CHECK(j["component_verdicts"][0]["m"].is_null());
  CHECK(j["component_verdicts"][0]["failure"] == "min_degree");
  CHECK(j["small_cancellation"] ==
        ordered_json{{"max_piece", 1}, {"C", 4}, {"T", 12}, {"advisory", false}});

  std::string text = report_to_text(r);
  CHECK(text.find("flags: positive, irreducible, redundant, not a proper power\n") !=
        std::string::npos);
  CHECK(text.find("largeness: not evaluated (redundant presentation)\n") != std::string::npos);
  CHECK(text.find("speciality: NOT_SPECIAL [direct] because component 0:") != std::string::npos);
}

TEST_CASE("alternating word: null d, disconnected graph, advisory T") {
  AnalysisReport r = analyze_presentation(6, "x0 x2^-1");
  ordered_json j = report_to_json(r);
  CHECK(j["multisets"]["A"] == ordered_json({2}));
  CHECK(j["multisets"]["B"] == ordered_json({4}));
  CHECK(j["multisets"]["Q"] == ordered_json::array());
  CHECK(j["multisets"]["d"].is_null());
  CHECK(j["multisets"]["dA"] == 2);
  CHECK(j["graph"]["components"] == 4);
  CHECK(j["graph"]["diameter"].is_null());  // disconnected
  CHECK(j["graph"]["girth"] == 3);
  CHECK(j["component_verdicts"].size() == 4);
  CHECK(j["component_verdicts"][0]["failure"] == "not_bipartite");
  CHECK(j["component_verdicts"][0]["part_sizes"].is_null());
  CHECK(j["small_cancellation"]["advisory"] == true);
  CHECK(j["small_cancellation"]["C"] == 2);
  CHECK(j["small_cancellation"]["T"] == 3);
  CHECK(j["largeness"] == ordered_json{{"delta", 4}, {"sigma", 0}, {"large", true}});

  std::string text = report_to_text(r);
  CHECK(text.find("multisets: A={2} B={4} Q={} sigma=0 dA=2 dB=2 d=-\n") != std::string::npos);
  CHECK(text.find("diameter -, 4 components\n") != std::string::npos);
  CHECK(text.find("T(3) (advisory)\n") != std::string::npos);
  CHECK(text.find("largeness: delta=4 sigma=0 large=yes\n") != std::string::npos);
}

TEST_CASE("rank-1 word: acyclic star graph, unconstrained C and T") {
  AnalysisReport r = analyze_presentation(1, "x0");
  ordered_json j = report_to_json(r);
  CHECK(j["graph"] ==
        ordered_json{{"vertices", 2}, {"edges", 1}, {"girth", nullptr}, {"diameter", 1},
                     {"regular_degree", 1}, {"components", 1}});
  CHECK(j["small_cancellation"] ==
        ordered_json{{"max_piece", 0}, {"C", nullptr}, {"T", nullptr}, {"advisory", false}});
  CHECK(j["speciality"]["reason"] == "fewer than 3 generators");

  std::string text = report_to_text(r);
  CHECK(text.find("girth none") != std::string::npos);
  CHECK(text.find("pieces: max length 0 against relator length 1; "
                  "C certified for every parameter; T unbounded\n") != std::string::npos);
}

TEST_CASE("method strings surface in the report") {
  CHECK(report_to_json(analyze_presentation(8, "x0 x2^-1 x7^-1 x1"))["speciality"]["method"] ==
        "theorem:mixed_m2");
  CHECK(report_to_json(analyze_presentation(8, "x0 x1^-1 x6 x1^-1"))["speciality"]["method"] ==
        "theorem:alternating_m2");
  CHECK(report_to_json(analyze_presentation(5, "x0 x0 x1 x3 x1"))["speciality"]["method"] ==
        "theorem:positive_m2");

  ordered_json miss = report_to_json(analyze_presentation(8, "x0 x1 x3"));
  CHECK(miss["speciality"]["method"] == "theorem:positive_m3+positive_m2");
  CHECK(miss["speciality"]["reason"].is_string());

  // reducible words fall back to the direct route
  ordered_json red = report_to_json(analyze_presentation(21, "x0 x3 x9"));
  CHECK(red["speciality"]["method"] == "direct");
  CHECK(red["speciality"]["verdict"] == "SPECIAL(3,3,3)");

  // the digon components of the mixed special word are complete bipartite
  ordered_json mix = report_to_json(analyze_presentation(8, "x0 x2^-1 x7^-1 x1"));
  CHECK(mix["component_verdicts"].size() == 2);
  CHECK(mix["component_verdicts"][0]["kind"] == "complete_bipartite");
  CHECK(mix["component_verdicts"][0]["m"] == 2);
  CHECK(mix["component_verdicts"][0]["plane_order"].is_null());

  ordered_json neg = report_to_json(analyze_presentation(7, "x0^-1 x1^-1 x3^-1"));
  CHECK(neg["flags"]["sign_class"] == "negative");
  CHECK(neg["speciality"]["method"] == "theorem:positive_m3");
  CHECK(neg["speciality"]["verdict"] == "SPECIAL(3,3,1)");
  CHECK(neg["largeness"]["sigma"] == -3);
}

}  // TEST_SUITE
