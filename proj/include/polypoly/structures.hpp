#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "polypoly/group_action.hpp"
#include "polypoly/poly_model.hpp"
#include "polypoly/rotation_group.hpp"
#include "polypoly/solid.hpp"

namespace polypoly {

// Axis selection rule for band_of_edge. The minimal rule is the one that
// produces bands; the maximal rule produces a different orbit family and is
// exposed without any claims about its structure.
enum class DotSelector { minimal, maximal };

// Orbit of a model edge under one 5-fold rotation, ordered by repeated
// application of the generator starting from the lowest edge index. Edge
// midpoints ride along so the band can be related to solid edges later.
struct Band {
  RotationAxis axis;
  std::vector<int> edge_indices;
  std::vector<Vec3> midpoints;
};

// A set of solid edges, pairwise vertex-disjoint, invariant under one axis.
struct Matching {
  RotationAxis axis;
  std::vector<int> edge_indices;  // sorted
};

// One matching per axis of a given fold, jointly partitioning the edge set.
struct Decomposition {
  SolidKind solid = SolidKind::tetrahedron;
  int fold = 0;
  std::vector<Matching> matchings;
};

namespace detail {

inline constexpr double kAxisMargin = 10 * kEps;

// Index of the axis whose |direction . u| is extremal; the runner-up must
// miss by more than the margin or the choice is meaningless.
inline int select_axis(const Vec3& u, const std::vector<RotationAxis>& axes,
                       DotSelector selector) {
  int best = -1;
  double best_value = -1e300, second = -1e300;
  for (int i = 0; i < static_cast<int>(axes.size()); ++i) {
    const double d = std::abs(dot(u, normalized(axes[i].direction)));
    const double value = selector == DotSelector::minimal ? -d : d;
    if (value > best_value) {
      second = best_value;
      best_value = value;
      best = i;
    } else if (value > second) {
      second = value;
    }
  }
  if (axes.size() > 1 && best_value - second <= kAxisMargin) {
    throw AmbiguousAxis("no axis wins the dot-product selection by a clear margin");
  }
  return best;
}

inline Vec3 edge_midpoint(const std::vector<Vec3>& vertices, std::pair<int, int> e) {
  return 0.5 * (vertices[e.first] + vertices[e.second]);
}

}  // namespace detail

// The band generated by a model edge: pick the 5-fold axis extremizing the
// |dot| of the normalized edge direction, then orbit the edge under that
// axis's generator. Minimal selection yields bands proper (one edge per
// component); maximal selection is exposed as-is.
inline Band band_of_edge(const PolyModel& model, int edge,
                         DotSelector selector = DotSelector::minimal) {
  const auto axes = rotation_axes(model.group, 5);
  const auto [a, b] = model.edges.at(edge);
  const Vec3 u = normalized(model.vertices[b] - model.vertices[a]);
  Band band;
  band.axis = axes[detail::select_axis(u, axes, selector)];

  std::vector<int> orbit;
  const Perm& g = model.edge_action[band.axis.generator_index];
  for (int e = edge; orbit.empty() || e != orbit.front(); e = g(e)) {
    orbit.push_back(e);
  }
  if (static_cast<int>(orbit.size()) != band.axis.fold) {
    throw Error("band orbit does not have length equal to the axis fold");
  }
  // circuit order is canonical once we start from the lowest edge index
  const auto lowest = std::min_element(orbit.begin(), orbit.end());
  std::rotate(orbit.begin(), lowest, orbit.end());

  if (selector == DotSelector::minimal) {
    std::set<int> comps;
    for (int e : orbit) comps.insert(model.component_of[e]);
    if (static_cast<int>(comps.size()) != band.axis.fold) {
      throw Error("band does not meet each component exactly once");
    }
  }
  band.edge_indices = orbit;
  for (int e : orbit) band.midpoints.push_back(detail::edge_midpoint(model.vertices, model.edges[e]));
  return band;
}

// Partition all model edges into bands. Bands are ordered by their lowest
// edge index.
inline std::vector<Band> band_decomposition(const PolyModel& model) {
  std::vector<Band> bands;
  std::vector<char> assigned(model.edge_count(), 0);
  for (int e = 0; e < model.edge_count(); ++e) {
    if (assigned[e]) continue;
    Band band = band_of_edge(model, e);
    for (int x : band.edge_indices) {
      if (assigned[x]) throw Error("bands overlap; edge set is not partitioned");
      assigned[x] = 1;
    }
    bands.push_back(std::move(band));
  }
  return bands;
}

// The solid matching woven through a band: each band edge has a unique
// nearest solid edge (by midpoint distance), and those nearest edges form a
// matching invariant under the band's axis.
inline Matching matching_of_band(const Band& band, const Solid& solid) {
  Matching m;
  m.axis = band.axis;
  for (const Vec3& mid : band.midpoints) {
    int best = -1;
    double best_d = 1e300, second = 1e300;
    for (int k = 0; k < static_cast<int>(solid.edges.size()); ++k) {
      const double d = distance(mid, detail::edge_midpoint(solid.vertices, solid.edges[k]));
      if (d < best_d) {
        second = best_d;
        best_d = d;
        best = k;
      } else if (d < second) {
        second = d;
      }
    }
    if (second - best_d <= detail::kAxisMargin) {
      throw Error("band edge has no unique nearest solid edge");
    }
    m.edge_indices.push_back(best);
  }
  std::sort(m.edge_indices.begin(), m.edge_indices.end());
  if (std::adjacent_find(m.edge_indices.begin(), m.edge_indices.end()) != m.edge_indices.end()) {
    throw Error("band edges map onto a repeated solid edge");
  }
  std::set<int> touched;
  for (int k : m.edge_indices) {
    const auto [a, b] = solid.edges[k];
    if (!touched.insert(a).second || !touched.insert(b).second) {
      throw Error("matching of band is not vertex-disjoint");
    }
  }
  return m;
}

// All single orbits of solid edges under the axis generator that have size
// equal to the fold and form matchings. An invariant matching is credited to
// the axis that fixes the most of its edges pointwise, so a half-turn's own
// opposite-edge pair is not also offered to the other half-turns that merely
// permute it.
inline std::vector<Matching> axial_orbit_matchings(const Solid& solid, const RotationAxis& axis) {
  const RotationGroup group = rotation_group(solid);
  const auto axes = rotation_axes(group, axis.fold);
  int self = -1;
  for (int i = 0; i < static_cast<int>(axes.size()); ++i) {
    if (nearly_equal(canonical_sign(normalized(axes[i].direction)),
                     canonical_sign(normalized(axis.direction)), 1e-7)) {
      self = i;
    }
  }
  if (self < 0) throw NoSuchAxes("axis does not belong to the solid's group");

  const int n = static_cast<int>(solid.edges.size());
  std::vector<Perm> edge_perms;
  for (const auto& ax : axes) {
    edge_perms.push_back(group.edge_perms[ax.generator_index]);
  }

  const auto is_matching = [&](const std::vector<int>& edges) {
    std::set<int> touched;
    for (int k : edges) {
      const auto [a, b] = solid.edges[k];
      if (!touched.insert(a).second || !touched.insert(b).second) return false;
    }
    return true;
  };
  const auto fixed_count = [&](const Perm& p, const std::vector<int>& edges) {
    int fixed = 0;
    for (int k : edges) fixed += p(k) == k;
    return fixed;
  };
  const auto invariant = [&](const Perm& p, const std::vector<int>& edges) {
    std::set<int> set(edges.begin(), edges.end());
    for (int k : edges) {
      if (!set.count(p(k))) return false;
    }
    return true;
  };

  // candidate edge sets: orbits of size fold, plus the pointwise-fixed set
  std::vector<std::vector<int>> candidates;
  const Perm& g = edge_perms[self];
  std::vector<char> seen(n, 0);
  std::vector<int> fixed_set;
  for (int e = 0; e < n; ++e) {
    if (g(e) == e) fixed_set.push_back(e);
    if (seen[e]) continue;
    std::vector<int> orbit;
    for (int x = e; orbit.empty() || x != e; x = g(x)) {
      orbit.push_back(x);
      seen[x] = 1;
    }
    if (static_cast<int>(orbit.size()) == axis.fold) {
      std::sort(orbit.begin(), orbit.end());
      candidates.push_back(orbit);
    }
  }
  if (static_cast<int>(fixed_set.size()) == axis.fold) candidates.push_back(fixed_set);

  std::vector<Matching> out;
  for (const auto& cand : candidates) {
    if (!is_matching(cand)) continue;
    int best_fixed = -1;
    for (int i = 0; i < static_cast<int>(axes.size()); ++i) {
      if (!invariant(edge_perms[i], cand)) continue;
      best_fixed = std::max(best_fixed, fixed_count(edge_perms[i], cand));
    }
    if (fixed_count(edge_perms[self], cand) < best_fixed) continue;
    Matching m;
    m.axis = axes[self];
    m.edge_indices = cand;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    return a.edge_indices < b.edge_indices;
  });
  return out;
}

// Exhaustive search for ways to pick one candidate matching per axis so the
// picks partition the solid's edges. Solutions that use the same family of
// edge sets under different axis labels are reported once.
inline std::vector<Decomposition> matching_decompositions(const Solid& solid, int fold) {
  const RotationGroup group = rotation_group(solid);
  const auto axes = rotation_axes(group, fold);
  const int n = static_cast<int>(solid.edges.size());

  std::vector<std::vector<Matching>> per_axis;
  std::vector<std::vector<std::uint64_t>> masks;
  for (const auto& axis : axes) {
    per_axis.push_back(axial_orbit_matchings(solid, axis));
    std::vector<std::uint64_t> axis_masks;
    for (const auto& m : per_axis.back()) {
      std::uint64_t mask = 0;
      for (int k : m.edge_indices) mask |= std::uint64_t{1} << k;
      axis_masks.push_back(mask);
    }
    masks.push_back(std::move(axis_masks));
  }

  // suffix unions let the search abandon branches that can no longer cover
  std::vector<std::uint64_t> reachable(axes.size() + 1, 0);
  for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
    reachable[i] = reachable[i + 1];
    for (std::uint64_t m : masks[i]) reachable[i] |= m;
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<int> chosen(axes.size(), -1);
  std::set<std::vector<std::vector<int>>> families;
  std::vector<Decomposition> out;
  const auto record = [&]() {
    std::vector<std::vector<int>> family;
    for (size_t i = 0; i < axes.size(); ++i) family.push_back(per_axis[i][chosen[i]].edge_indices);
    std::sort(family.begin(), family.end());
    if (!families.insert(family).second) return;
    Decomposition d;
    d.solid = solid.kind;
    d.fold = fold;
    for (size_t i = 0; i < axes.size(); ++i) d.matchings.push_back(per_axis[i][chosen[i]]);
    out.push_back(std::move(d));
  };
  const auto search = [&](auto&& self, size_t i, std::uint64_t covered) -> void {
    if ((covered | reachable[i]) != full) return;
    if (i == axes.size()) {
      if (covered == full) record();
      return;
    }
    for (int c = 0; c < static_cast<int>(masks[i].size()); ++c) {
      if (covered & masks[i][c]) continue;
      chosen[i] = c;
      self(self, i + 1, covered | masks[i][c]);
    }
  };
  search(search, 0, 0);

  if (out.empty()) throw NoDecomposition("no selection of axial matchings partitions the edges");
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    std::vector<std::vector<int>> fa, fb;
    for (const auto& m : a.matchings) fa.push_back(m.edge_indices);
    for (const auto& m : b.matchings) fb.push_back(m.edge_indices);
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa < fb;
  });
  return out;
}

// A partition of the edge set together with the action each group element
// induces on the parts.
struct StructureSystem {
  std::vector<std::vector<int>> structures;
  std::vector<int> structure_of;  // edge index -> structure id
  GroupAction action;
};

// Build the action of the group on the parts of an edge partition. Throws
// if some element fails to map parts onto parts.
inline StructureSystem induced_structure_system(const std::vector<Perm>& edge_action,
                                                std::vector<std::vector<int>> structures) {
  StructureSystem sys;
  if (structures.empty() || edge_action.empty()) throw Error("empty structure system");
  const int edge_count = edge_action.front().size();
  sys.structure_of.assign(edge_count, -1);
  for (int s = 0; s < static_cast<int>(structures.size()); ++s) {
    for (int e : structures[s]) {
      if (e < 0 || e >= edge_count || sys.structure_of[e] >= 0) {
        throw Error("structures do not partition the edge set");
      }
      sys.structure_of[e] = s;
    }
  }
  for (int v : sys.structure_of) {
    if (v < 0) throw Error("structures do not partition the edge set");
  }
  sys.structures = std::move(structures);

  std::vector<Perm> perms;
  for (const Perm& p : edge_action) {
    Perm q;
    q.images.assign(sys.structures.size(), -1);
    for (int s = 0; s < static_cast<int>(sys.structures.size()); ++s) {
      const int image = sys.structure_of[p(sys.structures[s].front())];
      for (int e : sys.structures[s]) {
        if (sys.structure_of[p(e)] != image) {
          throw Error("group element splits a structure");
        }
      }
      q.images[s] = image;
    }
    perms.push_back(std::move(q));
  }
  sys.action = make_action(std::move(perms));
  return sys;
}

}  // namespace polypoly
