#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wcell/wgraph.hpp"

namespace wcell {

// Canonical form: fixed key order, vertices by id, mu by (from, to).
inline std::string to_json(const SColoredGraph& g) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = g.n();
  ordered_json vs = ordered_json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    ordered_json vj;
    vj["id"] = v;
    vj["tau"] = g.tau(v).to_vector();
    if (const auto& l = g.label(v)) {
      ordered_json lj;
      lj["molecule"] = l->molecule;
      lj["tableau"] = l->tableau.to_string();
      vj["label"] = std::move(lj);
    } else {
      vj["label"] = nullptr;
    }
    vs.push_back(std::move(vj));
  }
  doc["vertices"] = std::move(vs);
  ordered_json mu = ordered_json::array();
  for (const MuEntry& e : g.entries()) {
    ordered_json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["w"] = e.w;
    mu.push_back(std::move(ej));
  }
  doc["mu"] = std::move(mu);
  return doc.dump(1) + "\n";
}

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline SColoredGraph from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  try {
    int n = doc.at("n").get<int>();
    const auto& vs = doc.at("vertices");
    std::vector<GeneratorSet> tau(vs.size());
    std::vector<std::optional<VertexLabel>> labels(vs.size());
    std::vector<char> seen(vs.size(), 0);
    for (const auto& vj : vs) {
      int id = vj.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(vs.size()) || seen[id]) throw FormatError("bad vertex id " + std::to_string(id));
      seen[id] = 1;
      tau[id] = GeneratorSet::from_vector(vj.at("tau").get<std::vector<int>>());
      const auto& lj = vj.at("label");
      if (!lj.is_null())
        labels[id] = VertexLabel{lj.at("molecule").get<int>(), StandardTableau::parse(lj.at("tableau").get<std::string>())};
    }
    std::vector<MuEntry> mu;
    for (const auto& ej : doc.at("mu"))
      mu.push_back({ej.at("from").get<int>(), ej.at("to").get<int>(), ej.at("w").get<long long>()});
    return SColoredGraph(n, std::move(tau), std::move(mu), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad graph document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("bad graph document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("bad graph document: ") + e.what());
  }
}

// Arcs as directed edges labelled by weight; simple edges undirected.
inline std::string to_dot(const SColoredGraph& g) {
  std::ostringstream out;
  out << "digraph W {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [label=\"";
    if (const auto& l = g.label(v)) out << l->tableau.to_string() << "\\n";
    out << "{";
    auto t = g.tau(v).to_vector();
    for (std::size_t k = 0; k < t.size(); ++k) out << (k ? "," : "") << t[k];
    out << "}\"];\n";
  }
  for (const Arc& a : arcs(g)) {
    bool simple = g.mu(a.head, a.tail) == 1 && g.mu(a.tail, a.head) == 1 && g.is_arc(a.head, a.tail);
    if (simple) {
      if (a.tail < a.head) out << "  " << a.tail << " -> " << a.head << " [dir=none];\n";
      continue;
    }
    out << "  " << a.tail << " -> " << a.head << " [label=\"" << a.w << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wcell
