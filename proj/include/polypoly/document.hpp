#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "polypoly/coloring.hpp"
#include "polypoly/poly_model.hpp"

namespace polypoly {

// Named palette used for documents and mesh materials. Past twelve colors the
// names repeat with a numeric suffix.
inline const std::array<const char*, 12>& color_names() {
  static const std::array<const char*, 12> names = {
      "red",     "orange", "yellow", "green", "cyan",  "blue",
      "violet", "magenta", "brown",  "teal",  "olive", "navy"};
  return names;
}

inline const std::array<std::array<double, 3>, 12>& color_rgbs() {
  static const std::array<std::array<double, 3>, 12> rgbs = {{{0.86, 0.20, 0.18},
                                                              {0.95, 0.55, 0.10},
                                                              {0.93, 0.85, 0.25},
                                                              {0.22, 0.65, 0.28},
                                                              {0.25, 0.80, 0.85},
                                                              {0.20, 0.35, 0.85},
                                                              {0.55, 0.30, 0.75},
                                                              {0.85, 0.25, 0.65},
                                                              {0.55, 0.38, 0.20},
                                                              {0.15, 0.55, 0.50},
                                                              {0.50, 0.55, 0.15},
                                                              {0.12, 0.15, 0.45}}};
  return rgbs;
}

inline std::string palette_color_name(int index) {
  const auto& names = color_names();
  std::string name = names[index % 12];
  if (index >= 12) name += std::to_string(index / 12 + 1);
  return name;
}

inline const std::array<double, 3>& palette_color_rgb(int index) {
  return color_rgbs()[index % 12];
}

// One edge coloring of one model, with enough geometry to rebuild it: edges
// are stored as endpoint coordinates, not indices, so a document stands on
// its own.
struct ColoringDocument {
  std::string model;
  std::string variant;  // empty when the model has no variants
  std::string scheme;
  std::vector<std::array<Vec3, 2>> edges;
  std::vector<std::string> palette;
  std::vector<int> edge_colors;
};

inline std::string format_g12(double x) {
  if (std::fabs(x) < 1e-12) x = 0.0;  // drop sign and noise on zeros
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline ColoringDocument make_document(const PolyModel& model, const std::string& model_name,
                                      const std::string& variant, const std::string& scheme,
                                      const Coloring& coloring) {
  if (static_cast<int>(coloring.edge_colors.size()) != model.edge_count()) {
    throw SizeMismatch("coloring does not cover the model's edges");
  }
  ColoringDocument doc;
  doc.model = model_name;
  doc.variant = variant;
  doc.scheme = scheme;
  for (const auto& [a, b] : model.edges) {
    doc.edges.push_back({model.vertices[a], model.vertices[b]});
  }
  for (int c = 0; c < coloring.num_colors; ++c) doc.palette.push_back(palette_color_name(c));
  doc.edge_colors = coloring.edge_colors;
  return doc;
}

inline std::string write_coloring_document(const ColoringDocument& doc) {
  std::ostringstream out;
  out << "polypoly/1 coloring\n";
  out << "model " << doc.model << "\n";
  if (!doc.variant.empty()) out << "variant " << doc.variant << "\n";
  out << "scheme " << doc.scheme << "\n";
  out << "palette";
  for (const std::string& name : doc.palette) out << " " << name;
  out << "\n";
  out << "edges " << doc.edges.size() << "\n";
  for (size_t e = 0; e < doc.edges.size(); ++e) {
    const auto& [p, q] = doc.edges[e];
    out << "e " << format_g12(p.x) << " " << format_g12(p.y) << " " << format_g12(p.z) << " "
        << format_g12(q.x) << " " << format_g12(q.y) << " " << format_g12(q.z) << " "
        << doc.edge_colors[e] << "\n";
  }
  return out.str();
}

inline ColoringDocument parse_coloring_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "polypoly/1 coloring") {
    throw Error("not a polypoly/1 coloring document");
  }
  ColoringDocument doc;
  long declared_edges = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "model") {
      ls >> doc.model;
    } else if (tag == "variant") {
      ls >> doc.variant;
    } else if (tag == "scheme") {
      ls >> doc.scheme;
    } else if (tag == "palette") {
      std::string name;
      while (ls >> name) doc.palette.push_back(name);
    } else if (tag == "edges") {
      ls >> declared_edges;
      if (!ls || declared_edges < 0) throw Error("bad edge count line");
    } else if (tag == "e") {
      Vec3 p, q;
      int color = -1;
      ls >> p.x >> p.y >> p.z >> q.x >> q.y >> q.z >> color;
      if (!ls) throw Error("bad edge line: " + line);
      doc.edges.push_back({p, q});
      doc.edge_colors.push_back(color);
    } else {
      throw Error("unknown line tag: " + tag);
    }
  }
  if (doc.model.empty()) throw Error("document has no model line");
  if (doc.scheme.empty()) throw Error("document has no scheme line");
  if (declared_edges != static_cast<long>(doc.edges.size())) {
    throw Error("edge count does not match edge lines");
  }
  for (int c : doc.edge_colors) {
    if (c < 0 || c >= static_cast<int>(doc.palette.size())) {
      throw Error("edge color outside the palette");
    }
  }
  return doc;
}

// Matches the document's coordinate edges onto the model's edge indices.
// Every document edge must snap onto a distinct model edge and cover all of
// them, so a valid document is a total recoloring of the model.
inline Coloring bind_coloring(const ColoringDocument& doc, const PolyModel& model) {
  if (static_cast<int>(doc.edges.size()) != model.edge_count()) {
    throw SizeMismatch("document edge count does not match the model");
  }
  std::vector<int> colors(model.edge_count(), -1);
  for (size_t i = 0; i < doc.edges.size(); ++i) {
    const int a = snap_to_vertex(model.vertices, doc.edges[i][0]);
    const int b = snap_to_vertex(model.vertices, doc.edges[i][1]);
    if (a < 0 || b < 0) throw Error("document endpoint is not a model vertex");
    const int e = find_edge(model.edges, a, b);
    if (e < 0) throw Error("document edge is not a model edge");
    if (colors[e] >= 0) throw Error("document colors a model edge twice");
    colors[e] = doc.edge_colors[i];
  }
  Coloring coloring = make_coloring(colors);
  if (coloring.num_colors != static_cast<int>(doc.palette.size())) {
    throw Error("palette size does not match the colors in use");
  }
  return coloring;
}

// Wavefront-style line mesh: one vertex record per model vertex, edges
// grouped by color, one material per palette entry.
inline std::string write_obj(const PolyModel& model, const Coloring& coloring,
                             const std::vector<std::string>& palette,
                             const std::string& mtl_filename) {
  if (static_cast<int>(coloring.edge_colors.size()) != model.edge_count()) {
    throw SizeMismatch("coloring does not cover the model's edges");
  }
  std::ostringstream out;
  out << "mtllib " << mtl_filename << "\n";
  for (const Vec3& v : model.vertices) {
    out << "v " << format_g12(v.x) << " " << format_g12(v.y) << " " << format_g12(v.z) << "\n";
  }
  for (int c = 0; c < coloring.num_colors; ++c) {
    out << "g " << palette[c] << "\n";
    out << "usemtl " << palette[c] << "\n";
    for (int e = 0; e < model.edge_count(); ++e) {
      if (coloring.edge_colors[e] != c) continue;
      out << "l " << model.edges[e].first + 1 << " " << model.edges[e].second + 1 << "\n";
    }
  }
  return out.str();
}

inline std::string write_mtl(const std::vector<std::string>& palette) {
  std::ostringstream out;
  for (size_t c = 0; c < palette.size(); ++c) {
    const auto& rgb = palette_color_rgb(static_cast<int>(c));
    out << "newmtl " << palette[c] << "\n";
    out << "Kd " << format_g12(rgb[0]) << " " << format_g12(rgb[1]) << " " << format_g12(rgb[2])
        << "\n";
  }
  return out.str();
}

}  // namespace polypoly
