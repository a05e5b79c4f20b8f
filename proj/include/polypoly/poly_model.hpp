#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polypoly/rotation_group.hpp"
#include "polypoly/solid.hpp"

namespace polypoly {

enum class Chirality { left, right };

// A polypolyhedron: an edge-transitive compound of 1-skeleta. The group's
// action on model edges is stored per element, parallel to group indexing.
struct PolyModel {
  std::string name;
  RotationGroup group;
  std::vector<Vec3> vertices;
  std::vector<std::pair<int, int>> edges;  // (i, j), i < j, lexicographic
  std::vector<int> component_of;           // edge index -> component id
  int component_count = 0;
  std::vector<Perm> edge_action;           // one perm of edge indices per element

  int edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<std::vector<int>> component_edges() const {
    std::vector<std::vector<int>> out(component_count);
    for (int e = 0; e < edge_count(); ++e) out[component_of[e]].push_back(e);
    return out;
  }
};

namespace detail {

inline std::vector<Perm> induce_edge_action(
    const RotationGroup& group, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Perm> action;
  action.reserve(group.order());
  for (const Perm& vp : group.vertex_perms) {
    Perm p;
    p.images.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      const int e = find_edge(edges, vp(a), vp(b));
      if (e < 0) throw Error("group does not preserve the edge set");
      p.images.push_back(e);
    }
    action.push_back(std::move(p));
  }
  return action;
}

inline void check_edge_transitive(const PolyModel& model) {
  std::set<int> orbit = {0};
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    const int e = frontier.back();
    frontier.pop_back();
    for (const Perm& p : model.edge_action) {
      if (orbit.insert(p(e)).second) frontier.push_back(p(e));
    }
  }
  if (static_cast<int>(orbit.size()) != model.edge_count()) {
    throw Error("model is not edge-transitive");
  }
}

inline void check_component_blocks(const PolyModel& model) {
  for (const Perm& p : model.edge_action) {
    std::vector<int> image_comp(model.component_count, -1);
    for (int e = 0; e < model.edge_count(); ++e) {
      const int c = model.component_of[e];
      const int ic = model.component_of[p(e)];
      if (image_comp[c] < 0) {
        image_comp[c] = ic;
      } else if (image_comp[c] != ic) {
        throw Error("group element splits a component");
      }
    }
  }
}

// All 4-sets of mutually equidistant, pairwise non-adjacent vertices.
inline std::vector<std::vector<int>> inscribed_tetrahedra(const Solid& dodec) {
  const int n = static_cast<int>(dodec.vertices.size());
  std::vector<std::vector<int>> result;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (find_edge(dodec.edges, a, b) >= 0) continue;
      const double side = distance(dodec.vertices[a], dodec.vertices[b]);
      for (int c = b + 1; c < n; ++c) {
        if (find_edge(dodec.edges, a, c) >= 0 || find_edge(dodec.edges, b, c) >= 0) continue;
        if (std::abs(distance(dodec.vertices[a], dodec.vertices[c]) - side) > kEps) continue;
        if (std::abs(distance(dodec.vertices[b], dodec.vertices[c]) - side) > kEps) continue;
        for (int d = c + 1; d < n; ++d) {
          if (find_edge(dodec.edges, a, d) >= 0 || find_edge(dodec.edges, b, d) >= 0 ||
              find_edge(dodec.edges, c, d) >= 0) {
            continue;
          }
          if (std::abs(distance(dodec.vertices[a], dodec.vertices[d]) - side) > kEps) continue;
          if (std::abs(distance(dodec.vertices[b], dodec.vertices[d]) - side) > kEps) continue;
          if (std::abs(distance(dodec.vertices[c], dodec.vertices[d]) - side) > kEps) continue;
          result.push_back({a, b, c, d});
        }
      }
    }
  }
  return result;
}

// Partitions of the 20 vertices into 5 disjoint inscribed tetrahedra.
inline std::vector<std::vector<int>> tetrahedron_partitions(
    const std::vector<std::vector<int>>& tetras, int vertex_count) {
  std::vector<std::vector<int>> partitions;  // each: list of tetra indices
  std::vector<int> chosen;
  std::vector<char> used(vertex_count, 0);

  const auto rec = [&](auto&& self, int first_free) -> void {
    if (first_free == vertex_count) {
      partitions.push_back(chosen);
      return;
    }
    for (int t = 0; t < static_cast<int>(tetras.size()); ++t) {
      const auto& quad = tetras[t];
      if (quad[0] != first_free) continue;  // lowest member must cover the hole
      bool free = true;
      for (int v : quad) free = free && !used[v];
      if (!free) continue;
      for (int v : quad) used[v] = 1;
      chosen.push_back(t);
      int next = first_free;
      while (next < vertex_count && used[next]) ++next;
      self(self, next);
      chosen.pop_back();
      for (int v : quad) used[v] = 0;
    }
  };
  rec(rec, 0);
  return partitions;
}

}  // namespace detail

// The geometric Five Intersecting Tetrahedra, inscribed in the canonical
// dodecahedron. The vertex set splits into five regular tetrahedra in
// exactly two mirror-image ways; chirality picks which one. Components are
// numbered by their smallest vertex index, so component 0 contains (1,1,1).
inline PolyModel build_fit(Chirality chirality = Chirality::left) {
  const Solid dodec = build_solid(SolidKind::dodecahedron);

  const auto tetras = detail::inscribed_tetrahedra(dodec);
  const auto partitions = detail::tetrahedron_partitions(
      tetras, static_cast<int>(dodec.vertices.size()));
  if (partitions.size() != 2) {
    throw Error("expected exactly two chiral tetrahedron partitions");
  }

  // Seed 4-set: the canonical tetrahedron coordinates, which are dodecahedron
  // vertices. The partition containing it is the left-handed form.
  const Solid seed = build_solid(SolidKind::tetrahedron);
  std::vector<int> seed_set;
  for (const Vec3& v : seed.vertices) seed_set.push_back(snap_to_vertex(dodec.vertices, v));
  std::sort(seed_set.begin(), seed_set.end());

  const auto contains_seed = [&](const std::vector<int>& partition) {
    for (int t : partition) {
      if (tetras[t] == seed_set) return true;
    }
    return false;
  };
  const bool first_has_seed = contains_seed(partitions[0]);
  if (first_has_seed == contains_seed(partitions[1])) {
    throw Error("seed tetrahedron does not separate the two partitions");
  }
  const auto& partition =
      (first_has_seed == (chirality == Chirality::left)) ? partitions[0] : partitions[1];

  PolyModel model;
  model.name = "fit";
  model.group = rotation_group(dodec);
  model.vertices = dodec.vertices;

  std::vector<int> component_of_vertex(dodec.vertices.size(), -1);
  std::vector<std::vector<int>> comps;
  for (int t : partition) comps.push_back(tetras[t]);
  std::sort(comps.begin(), comps.end());  // by smallest vertex index
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (int v : comps[c]) component_of_vertex[v] = c;
  }

  for (const auto& quad : comps) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        model.edges.emplace_back(std::min(quad[i], quad[j]), std::max(quad[i], quad[j]));
      }
    }
  }
  std::sort(model.edges.begin(), model.edges.end());
  model.component_count = 5;
  for (const auto& [a, b] : model.edges) {
    model.component_of.push_back(component_of_vertex[a]);
  }

  model.edge_action = detail::induce_edge_action(model.group, model.edges);
  detail::check_edge_transitive(model);
  detail::check_component_blocks(model);
  return model;
}

// A base solid viewed as a trivial one-component polypolyhedron.
inline PolyModel solid_model(SolidKind kind) {
  const Solid solid = build_solid(kind);
  PolyModel model;
  model.name = solid_name(kind);
  model.group = rotation_group(solid);
  model.vertices = solid.vertices;
  model.edges = solid.edges;
  model.component_count = 1;
  model.component_of.assign(model.edges.size(), 0);
  model.edge_action = model.group.edge_perms;
  detail::check_edge_transitive(model);
  return model;
}

}  // namespace polypoly
