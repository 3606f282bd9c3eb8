// Command-line front end: analyze one cyclic presentation, search a range for
// special presentations, enumerate perfect difference sets, or export a star
// graph. Exit codes: 0 success, 1 analysis error, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "starpoly/classifier.hpp"
#include "starpoly/difference_sets.hpp"
#include "starpoly/report.hpp"
#include "starpoly/star_graph.hpp"

namespace {

using nlohmann::ordered_json;

int write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return std::cout.good() ? 0 : 1;
  }
  std::ofstream f(path, std::ios::binary);
  f << content;
  f.flush();
  if (!f.good()) {
    std::cerr << "starpoly: cannot write " << path << "\n";
    return 1;
  }
  return 0;
}

std::optional<starpoly::SignClass> parse_sign(const std::string& s) {
  if (s == "positive") return starpoly::SignClass::Positive;
  if (s == "negative") return starpoly::SignClass::Negative;
  if (s == "alternating") return starpoly::SignClass::Alternating;
  if (s == "mixed") return starpoly::SignClass::Mixed;
  return std::nullopt;  // "any"
}

std::string graph_text(const starpoly::StarGraph& star) {
  std::ostringstream o;
  for (const starpoly::Edge& e : star.graph.edges()) {
    for (int c = 0; c < e.mult; ++c)
      o << star.vertex_name(e.u) << " -- " << star.vertex_name(e.v) << "\n";
  }
  return o.str();
}

ordered_json graph_json(const starpoly::CyclicPresentation& p, const starpoly::StarGraph& star) {
  ordered_json j;
  j["n"] = p.n;
  j["word"] = p.word.str();
  ordered_json names = ordered_json::array();
  for (int v = 0; v < star.graph.vertex_count(); ++v) names.push_back(star.vertex_name(v));
  j["vertices"] = std::move(names);
  ordered_json edges = ordered_json::array();
  for (const starpoly::Edge& e : star.graph.edges())
    edges.push_back(ordered_json::array({e.u, e.v, e.mult}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star graph analysis of cyclic presentations P_n(w)"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int m_filter = 0;
  std::string word;
  std::string sign = "any";
  std::string out_path;
  std::string analyze_format = "text";
  std::string search_format = "text";
  std::string diffset_format = "text";
  std::string export_format = "dot";

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one presentation");
  analyze->add_option("-n,--n", n, "generator count")->required();
  analyze->add_option("-w,--word", word, "defining word, e.g. \"x0 x1 x3\" or \"x0*x1^-1\"")->required();
  analyze->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}))
      ->capture_default_str();
  analyze->add_option("--out", out_path, "write to file instead of standard output");

  CLI::App* search = app.add_subcommand("search", "enumerate special presentations at one (n, k)");
  search->add_option("-n,--n", n, "generator count")->required();
  search->add_option("--k", k, "relator length")->required();
  CLI::Option* m_opt = search->add_option("--m", m_filter, "keep only hits with this polygon parameter");
  search->add_option("--sign", sign, "restrict the scan to one sign class")
      ->check(CLI::IsMember({"positive", "negative", "alternating", "mixed", "any"}))
      ->capture_default_str();
  search->add_option("--format", search_format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  search->add_option("--out", out_path, "write to file instead of standard output");

  CLI::App* diffset = app.add_subcommand("diffset", "enumerate perfect difference sets of order k");
  diffset->add_option("--k", k, "set size")->required();
  diffset->add_option("--format", diffset_format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  diffset->add_option("--out", out_path, "write to file instead of standard output");

  CLI::App* exporter = app.add_subcommand("export", "emit the star graph of one presentation");
  exporter->add_option("-n,--n", n, "generator count")->required();
  exporter->add_option("-w,--word", word, "defining word")->required();
  exporter->add_option("--format", export_format, "output format")
      ->check(CLI::IsMember({"dot", "json", "text"}))
      ->capture_default_str();
  exporter->add_option("--out", out_path, "write to file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      const starpoly::AnalysisReport rep = starpoly::analyze_presentation(n, word);
      std::string content;
      if (analyze_format == "json")
        content = starpoly::report_to_json(rep).dump(2) + "\n";
      else if (analyze_format == "dot")
        content = starpoly::to_dot(rep.star);
      else
        content = starpoly::report_to_text(rep);
      return write_out(out_path, content);
    }

    if (app.got_subcommand(search)) {
      starpoly::SearchResult res = starpoly::enumerate_special(n, k, parse_sign(sign));
      if (m_opt->count() > 0) {
        std::erase_if(res.hits,
                      [&](const starpoly::SpecialHit& h) { return h.report.m != m_filter; });
      }
      std::string content;
      if (search_format == "json") {
        ordered_json j;
        j["n"] = res.n;
        j["k"] = res.k;
        j["sign"] = sign;
        j["m"] = m_opt->count() > 0 ? ordered_json(m_filter) : ordered_json(nullptr);
        j["words_scanned"] = res.words_scanned;
        j["words_eligible"] = res.words_eligible;
        ordered_json hits = ordered_json::array();
        for (const starpoly::SpecialHit& h : res.hits) {
          const starpoly::SubscriptMultisets ms = starpoly::subscript_multisets(h.word);
          ordered_json e;
          e["word"] = h.word.str();
          e["verdict"] = h.report.verdict_string();
          e["m"] = h.report.m;
          e["k"] = h.report.k;
          e["nu"] = h.report.nu;
          e["method"] = h.report.method;
          e["A"] = ms.A;
          e["B"] = ms.B;
          e["Q"] = ms.Q;
          hits.push_back(std::move(e));
        }
        j["hits"] = std::move(hits);
        content = j.dump(2) + "\n";
      } else {
        std::ostringstream o;
        o << "search n=" << res.n << " k=" << res.k << " sign=" << sign << " m="
          << (m_opt->count() > 0 ? std::to_string(m_filter) : "any") << "\n";
        for (const starpoly::SpecialHit& h : res.hits) {
          const starpoly::SubscriptMultisets ms = starpoly::subscript_multisets(h.word);
          o << h.word.str() << "  " << h.report.verdict_string() << "  [" << h.report.method
            << "]  A=";
          for (size_t i = 0; i < ms.A.size(); ++i) o << (i ? "," : "") << ms.A[i];
          o << " B=";
          for (size_t i = 0; i < ms.B.size(); ++i) o << (i ? "," : "") << ms.B[i];
          o << " Q=";
          for (size_t i = 0; i < ms.Q.size(); ++i) o << (i ? "," : "") << ms.Q[i];
          o << "\n";
        }
        o << res.hits.size() << " hits from " << res.words_eligible << " eligible of "
          << res.words_scanned << " scanned\n";
        content = o.str();
      }
      return write_out(out_path, content);
    }

    if (app.got_subcommand(diffset)) {
      const auto sets = starpoly::enumerate_perfect_difference_sets(k);
      std::string content;
      if (diffset_format == "json") {
        ordered_json j;
        j["k"] = k;
        j["modulus"] = k * k - k + 1;
        j["sets"] = sets;
        content = j.dump(2) + "\n";
      } else {
        std::ostringstream o;
        for (const auto& s : sets) {
          for (size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
          o << "\n";
        }
        content = o.str();
      }
      return write_out(out_path, content);
    }

    // export
    const starpoly::CyclicPresentation p = starpoly::make_presentation(n, word);
    const starpoly::StarGraph star = starpoly::build_star_graph(p);
    std::string content;
    if (export_format == "json")
      content = graph_json(p, star).dump(2) + "\n";
    else if (export_format == "text")
      content = graph_text(star);
    else
      content = starpoly::to_dot(star);
    return write_out(out_path, content);
  } catch (const std::exception& e) {
    std::cerr << "starpoly: " << e.what() << "\n";
    return 1;
  }
}
