#include "defcor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace defcor {

json cover_to_json(const Cover& c, const std::vector<VertexId>& outer_cycle) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    json vertex{{"id", v}};
    if (c.base().label(v) != std::to_string(v)) vertex["label"] = c.base().label(v);
    vertex["list_size"] = c.list_size(v);
    doc["vertices"].push_back(std::move(vertex));
  }
  doc["edges"] = json::array();
  for (int e = 0; e < c.base().num_edges(); ++e) {
    const Edge& edge = c.base().edge(e);
    Matching m = c.matching(e);
    std::sort(m.begin(), m.end());
    json matching = json::array();
    for (auto [a, b] : m) matching.push_back({a, b});
    doc["edges"].push_back({{"u", edge.u}, {"v", edge.v}, {"matching", matching}});
  }
  if (!outer_cycle.empty()) doc["outer_cycle"] = outer_cycle;
  return doc;
}

CoverFile cover_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
      throw ParseError("cover document needs \"vertices\" and \"edges\"");
    const auto& vertices = doc.at("vertices");
    const int n = static_cast<int>(vertices.size());
    std::vector<std::string> labels(n);
    std::vector<int> sizes(n, -1);
    for (const auto& vertex : vertices) {
      const int id = vertex.at("id").get<int>();
      if (id < 0 || id >= n || sizes[id] >= 0)
        throw ParseError("vertex ids must be exactly 0.." + std::to_string(n - 1));
      labels[id] = vertex.contains("label") ? vertex.at("label").get<std::string>()
                                            : std::to_string(id);
      sizes[id] = vertex.at("list_size").get<int>();
      if (sizes[id] < 0) throw ParseError("negative list size at vertex " + std::to_string(id));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<Matching> matchings;
    for (const auto& edge : doc.at("edges")) {
      VertexId u = edge.at("u").get<int>();
      VertexId v = edge.at("v").get<int>();
      Matching m;
      if (edge.contains("matching")) {
        for (const auto& pair : edge.at("matching")) {
          if (!pair.is_array() || pair.size() != 2)
            throw ParseError("matching entries must be [u_index, v_index]");
          m.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
      }
      if (u > v) {
        std::swap(u, v);
        for (auto& [a, b] : m) std::swap(a, b);
      }
      edges.emplace_back(u, v);
      matchings.push_back(std::move(m));
    }
    CoverFile out{Cover(CoverData{Graph(n, edges, labels), sizes, matchings}), {}};
    if (doc.contains("outer_cycle")) out.outer_cycle = doc.at("outer_cycle").get<std::vector<int>>();
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed cover document: ") + e.what());
  }
}

CoverFile read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return cover_from_json(doc);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string cover_to_dot(const Cover& c, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    out << "  " << v << " [name=\"" << c.base().label(v) << "\", list_size=" << c.list_size(v)
        << "];\n";
  }
  for (int e = 0; e < c.base().num_edges(); ++e) {
    const Edge& edge = c.base().edge(e);
    Matching m = c.matching(e);
    std::sort(m.begin(), m.end());
    out << "  " << edge.u << " -- " << edge.v << " [label=\"";
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i].first << ":" << m[i].second;
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json certificate_to_json(const Certificate& cert) {
  json doc;
  doc["kind"] = cert.feasible() ? "coloring" : "infeasible";
  if (cert.coloring) {
    json coloring = json::object();
    for (VertexId v = 0; v < cert.coloring->size(); ++v) {
      if (cert.coloring->colored(v)) coloring[std::to_string(v)] = (*cert.coloring)[v];
    }
    doc["coloring"] = std::move(coloring);
  }
  doc["stats"] = {{"nodes", cert.stats.nodes}, {"elapsed_ms", cert.stats.elapsed_ms}};
  return doc;
}

json census_to_json(const Census& census) {
  json table = json::array();
  for (const auto& e : census.entries) {
    json row{{"pair", {e.alpha, e.beta}},
             {"classification", e.cls.good() ? "good" : to_string(*e.cls.bad)}};
    row["pair_type"] = e.type ? json(to_string(*e.type)) : json(nullptr);
    json witness = json::array();
    for (const auto& lab : e.cls.witnesses) {
      json roles = json::object();
      const char* names[] = {"a", "b", "c", "d"};
      for (int role = 0; role < 4; ++role)
        roles[names[role]] = {{"vertex", lab.vertex[role]}, {"colors", lab.colors[role]}};
      witness.push_back(std::move(roles));
    }
    row["witness"] = std::move(witness);
    if (e.cls.z_pair) row["z_pair"] = {e.cls.z_pair->first, e.cls.z_pair->second};
    table.push_back(std::move(row));
  }
  return {{"bad_pairs", census.bad_count()}, {"pairs", table}};
}

}  // namespace defcor
