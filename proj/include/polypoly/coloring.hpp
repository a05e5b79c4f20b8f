#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "polypoly/counting.hpp"
#include "polypoly/poly_model.hpp"

namespace polypoly {

// An edge coloring: a color index per edge, with color indices dense in
// 0..num_colors-1.
struct Coloring {
  std::vector<int> edge_colors;
  int num_colors = 0;
};

inline Coloring make_coloring(std::vector<int> edge_colors) {
  Coloring c;
  int top = -1;
  for (int v : edge_colors) {
    if (v < 0) throw Error("negative color index");
    top = std::max(top, v);
  }
  std::vector<char> present(top + 1, 0);
  for (int v : edge_colors) present[v] = 1;
  if (std::find(present.begin(), present.end(), 0) != present.end()) {
    throw Error("color indices are not dense");
  }
  c.edge_colors = std::move(edge_colors);
  c.num_colors = top + 1;
  return c;
}

// Evidence that a coloring fails the symmetry test: element `element` sends
// color class `color` to an edge set that is not a color class.
struct SymmetryWitness {
  int element = 0;
  int color = 0;
  std::vector<int> image_edges;
};

// The symmetry test over an explicit edge action: every group element must
// send every color class onto some color class. Returns the first
// counterexample, or nothing if the coloring is symmetric.
inline std::optional<SymmetryWitness> check_symmetric(const std::vector<Perm>& edge_action,
                                                      const Coloring& coloring) {
  if (edge_action.empty() ||
      edge_action.front().size() != static_cast<int>(coloring.edge_colors.size())) {
    throw SizeMismatch("coloring domain does not match the edge set");
  }
  std::vector<std::vector<int>> classes(coloring.num_colors);
  for (int e = 0; e < static_cast<int>(coloring.edge_colors.size()); ++e) {
    classes[coloring.edge_colors[e]].push_back(e);
  }
  for (int g = 0; g < static_cast<int>(edge_action.size()); ++g) {
    const Perm& p = edge_action[g];
    for (int c = 0; c < coloring.num_colors; ++c) {
      const int image_color = coloring.edge_colors[p(classes[c].front())];
      bool uniform = true;
      for (int e : classes[c]) uniform = uniform && coloring.edge_colors[p(e)] == image_color;
      // a uniform image of the right size is exactly the target class
      if (uniform && classes[image_color].size() == classes[c].size()) continue;
      SymmetryWitness w;
      w.element = g;
      w.color = c;
      for (int e : classes[c]) w.image_edges.push_back(p(e));
      std::sort(w.image_edges.begin(), w.image_edges.end());
      return w;
    }
  }
  return std::nullopt;
}

inline bool is_symmetric_coloring(const PolyModel& model, const Coloring& coloring) {
  return !check_symmetric(model.edge_action, coloring).has_value();
}

// Brute-force enumeration of all symmetric k-colorings that use every color,
// reported as the lexicographically smallest member of each orbit under the
// model's edge action.
inline std::vector<Coloring> exhaustive_symmetric_colorings(const PolyModel& model, int k) {
  const int n = model.edge_count();
  if (int_pow(k, n) > kLabelingGuard) throw TooLarge("k^edges exceeds the enumeration guard");

  std::vector<Coloring> reps;
  std::vector<int> colors(n, 0);
  for (;;) {
    const bool all_used = [&] {
      std::vector<char> present(k, 0);
      for (int v : colors) present[v] = 1;
      return std::find(present.begin(), present.end(), 0) == present.end();
    }();
    if (all_used) {
      Coloring c;
      c.edge_colors = colors;
      c.num_colors = k;
      if (!check_symmetric(model.edge_action, c).has_value()) {
        bool minimal = true;
        for (const Perm& p : model.edge_action) {
          if (apply_to_labeling(p, colors) < colors) {
            minimal = false;
            break;
          }
        }
        if (minimal) reps.push_back(std::move(c));
      }
    }
    int i = n - 1;
    while (i >= 0 && colors[i] == k - 1) colors[i--] = 0;
    if (i < 0) break;
    ++colors[i];
  }
  return reps;
}

}  // namespace polypoly
