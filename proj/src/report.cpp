#include "starpoly/report.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace starpoly {

namespace {

using nlohmann::ordered_json;

ordered_json opt_int(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

const char* kind_token(PolygonKind k) {
  switch (k) {
    case PolygonKind::GeneralizedMGon: return "generalized_m_gon";
    case PolygonKind::ProjectivePlane: return "projective_plane";
    case PolygonKind::CompleteBipartite: return "complete_bipartite";
    case PolygonKind::NotPolygon: return "not_polygon";
  }
  return "not_polygon";
}

const char* failure_token(PolygonFailure f) {
  switch (f) {
    case PolygonFailure::None: return nullptr;
    case PolygonFailure::Disconnected: return "disconnected";
    case PolygonFailure::NotBipartite: return "not_bipartite";
    case PolygonFailure::MinDegree: return "min_degree";
    case PolygonFailure::Girth: return "girth";
    case PolygonFailure::Diameter: return "diameter";
  }
  return nullptr;
}

std::string multiset_text(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

}  // namespace

AnalysisReport analyze_presentation(const CyclicPresentation& p) {
  AnalysisReport r;
  r.presentation = p;
  r.multisets = subscript_multisets(p.word);
  r.star = build_star_graph(p);
  r.profile = graph_profile(r.star.graph);
  r.component_verdicts.reserve(r.profile.components.size());
  for (const auto& comp : r.profile.components)
    r.component_verdicts.push_back(recognize_generalized_polygon(induced_subgraph(r.star.graph, comp)));
  r.pieces = compute_pieces(p);
  r.t = t_parameter(r.pieces, r.profile.girth);
  assert_high_t_structure(p, r.t);

  SpecialityReport direct = check_special_direct(p);
  auto theorem = classify_by_theorems(p);
  if (theorem) {
    if (theorem->special != direct.special ||
        (direct.special && (theorem->m != direct.m || theorem->nu != direct.nu)))
      throw std::logic_error("analyze_presentation: closed form and direct check disagree on " +
                             p.word.str() + " at n = " + std::to_string(p.n));
    r.speciality = std::move(*theorem);
  } else {
    r.speciality = std::move(direct);
  }
  if (!p.redundant) r.largeness = largeness_flags(p);
  return r;
}

AnalysisReport analyze_presentation(int n, const std::string& word_text) {
  return analyze_presentation(make_presentation(n, word_text));
}

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  const CyclicPresentation& p = r.presentation;
  const SubscriptMultisets& ms = r.multisets;
  ordered_json j;
  j["n"] = p.n;
  j["word"] = p.word.str();
  j["flags"] = ordered_json{{"irreducible", p.irreducible},
                            {"redundant", p.redundant},
                            {"proper_power", p.proper_power()},
                            {"sign_class", to_string(sign_class(p.word))}};
  j["multisets"] = ordered_json{{"A", ms.A},
                                {"B", ms.B},
                                {"Q", ms.Q},
                                {"Qplus", ms.Qplus},
                                {"Qminus", ms.Qminus},
                                {"d", opt_int(ms.d)},
                                {"dA", ms.dA},
                                {"dB", ms.dB},
                                {"sigma", ms.sigma}};
  j["graph"] = ordered_json{{"vertices", r.profile.vertex_count},
                            {"edges", r.profile.edge_count},
                            {"girth", opt_int(r.profile.girth)},
                            {"diameter", opt_int(r.profile.diameter)},
                            {"regular_degree", opt_int(r.profile.regular_degree)},
                            {"components", r.profile.component_count}};
  ordered_json comps = ordered_json::array();
  for (const PolygonVerdict& v : r.component_verdicts) {
    ordered_json c;
    c["kind"] = kind_token(v.kind);
    c["m"] = v.is_polygon() ? ordered_json(v.m) : ordered_json(nullptr);
    if (v.part_sizes)
      c["part_sizes"] = ordered_json::array({v.part_sizes->first, v.part_sizes->second});
    else
      c["part_sizes"] = nullptr;
    c["plane_order"] = opt_int(v.plane_order);
    const char* fail = failure_token(v.failure);
    c["failure"] = fail ? ordered_json(fail) : ordered_json(nullptr);
    comps.push_back(std::move(c));
  }
  j["component_verdicts"] = std::move(comps);
  j["small_cancellation"] = ordered_json{{"max_piece", r.pieces.max_piece_length},
                                         {"C", opt_int(r.pieces.c_parameter)},
                                         {"T", opt_int(r.t.value)},
                                         {"advisory", r.t.advisory}};
  const SpecialityReport& s = r.speciality;
  j["speciality"] = ordered_json{{"verdict", s.verdict_string()},
                                 {"special", s.special},
                                 {"m", s.special ? ordered_json(s.m) : ordered_json(nullptr)},
                                 {"k", s.k},
                                 {"nu", s.special ? ordered_json(s.nu) : ordered_json(nullptr)},
                                 {"method", s.method},
                                 {"reason", s.special ? ordered_json(nullptr) : ordered_json(s.reason)}};
  if (r.largeness) {
    j["largeness"] = ordered_json{{"delta", r.largeness->delta},
                                  {"sigma", r.largeness->sigma},
                                  {"large", r.largeness->large}};
  } else {
    j["largeness"] = nullptr;
  }
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  const CyclicPresentation& p = r.presentation;
  const SubscriptMultisets& ms = r.multisets;
  std::ostringstream out;
  out << "P_" << p.n << "(" << p.word.str() << ")\n";
  out << "flags: " << to_string(sign_class(p.word)) << ", "
      << (p.irreducible ? "irreducible" : "reducible") << ", "
      << (p.redundant ? "redundant" : "non-redundant") << ", "
      << (p.proper_power() ? "proper power" : "not a proper power") << "\n";
  out << "multisets: A=" << multiset_text(ms.A) << " B=" << multiset_text(ms.B)
      << " Q=" << multiset_text(ms.Q) << " sigma=" << ms.sigma << " dA=" << ms.dA
      << " dB=" << ms.dB << " d=";
  if (ms.d)
    out << *ms.d;
  else
    out << "-";
  out << "\n";
  out << "star graph: " << r.profile.vertex_count << " vertices, " << r.profile.edge_count
      << " edges, ";
  if (r.profile.regular_degree)
    out << *r.profile.regular_degree << "-regular, ";
  else
    out << "degrees " << r.profile.min_degree << ".." << r.profile.max_degree << ", ";
  out << "girth ";
  if (r.profile.girth)
    out << *r.profile.girth;
  else
    out << "none";
  out << ", diameter ";
  if (r.profile.diameter)
    out << *r.profile.diameter;
  else
    out << "-";
  out << ", " << r.profile.component_count
      << (r.profile.component_count == 1 ? " component" : " components") << "\n";
  for (size_t i = 0; i < r.component_verdicts.size(); ++i)
    out << "component " << i << ": " << r.component_verdicts[i].describe() << "\n";
  out << "pieces: max length " << r.pieces.max_piece_length << " against relator length "
      << r.pieces.min_relator_length << "; C ";
  if (r.pieces.c_parameter)
    out << "certified up to C(" << *r.pieces.c_parameter << ")";
  else
    out << "certified for every parameter";
  out << "; ";
  if (r.t.value)
    out << "T(" << *r.t.value << ")";
  else
    out << "T unbounded";
  if (r.t.advisory) out << " (advisory)";
  out << "\n";
  out << "speciality: " << r.speciality.verdict_string() << " [" << r.speciality.method << "]";
  if (!r.speciality.special) out << " because " << r.speciality.reason;
  out << "\n";
  if (r.largeness) {
    out << "largeness: delta=" << r.largeness->delta << " sigma=" << r.largeness->sigma
        << " large=" << (r.largeness->large ? "yes" : "no") << "\n";
  } else {
    out << "largeness: not evaluated (redundant presentation)\n";
  }
  return out.str();
}

}  // namespace starpoly
