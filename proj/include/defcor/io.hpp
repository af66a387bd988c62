#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "defcor/classify.hpp"
#include "defcor/cover.hpp"
#include "defcor/solver.hpp"

namespace defcor {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Cover file contents: the cover plus an optional outer cycle.
struct CoverFile {
  Cover cover;
  std::vector<VertexId> outer_cycle;
};

/// Canonical cover document:
///   {"vertices":[{"id":0,"label":"u","list_size":3},...],
///    "edges":[{"u":0,"v":1,"matching":[[0,2],...]},...]}
/// Matching entries are 0-based local color indices (u side, v side).
/// Edges are emitted in the cover's edge order with sorted matchings; an
/// "outer_cycle" array is added when non-empty.
json cover_to_json(const Cover& c, const std::vector<VertexId>& outer_cycle = {});

/// Throws ParseError on malformed documents, GraphError and CoverError on
/// invalid content.
CoverFile cover_from_json(const json& doc);

CoverFile read_cover_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// DOT rendering of the base graph; each edge is labeled with its matching.
std::string cover_to_dot(const Cover& c, const std::string& name = "G");

/// {"kind":"coloring"|"infeasible","coloring":{"<vertex>":<index>,...},
///  "stats":{"nodes":N,"elapsed_ms":T}}
json certificate_to_json(const Certificate& cert);

json census_to_json(const Census& census);

}  // namespace defcor
