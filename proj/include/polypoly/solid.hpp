#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "polypoly/common.hpp"
#include "polypoly/vec3.hpp"

namespace polypoly {

enum class SolidKind { tetrahedron, cube, dodecahedron };

inline const char* solid_name(SolidKind kind) {
  switch (kind) {
    case SolidKind::tetrahedron: return "tetrahedron";
    case SolidKind::cube: return "cube";
    case SolidKind::dodecahedron: return "dodecahedron";
  }
  return "?";
}

struct Solid {
  SolidKind kind;
  std::vector<Vec3> vertices;
  // Unordered pairs (i, j), i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

inline std::vector<std::pair<int, int>> nearest_neighbor_edges(
    const std::vector<Vec3>& vertices) {
  const int n = static_cast<int>(vertices.size());
  double min_dist = std::numeric_limits<double>::max();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      min_dist = std::min(min_dist, distance(vertices[i], vertices[j]));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(vertices[i], vertices[j]) <= min_dist + kEps) {
        edges.emplace_back(i, j);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

// Canonical coordinates. The dodecahedron takes the cube's eight (±1,±1,±1)
// corners plus the twelve cyclic permutations of (0, ±1/φ, ±φ).
inline Solid build_solid(SolidKind kind) {
  Solid solid;
  solid.kind = kind;
  switch (kind) {
    case SolidKind::tetrahedron:
      solid.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case SolidKind::cube:
      for (double x : {1.0, -1.0}) {
        for (double y : {1.0, -1.0}) {
          for (double z : {1.0, -1.0}) {
            solid.vertices.push_back({x, y, z});
          }
        }
      }
      break;
    case SolidKind::dodecahedron: {
      const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
      const double inv = 1.0 / phi;
      for (double x : {1.0, -1.0}) {
        for (double y : {1.0, -1.0}) {
          for (double z : {1.0, -1.0}) {
            solid.vertices.push_back({x, y, z});
          }
        }
      }
      for (double a : {inv, -inv}) {
        for (double b : {phi, -phi}) {
          solid.vertices.push_back({0, a, b});
          solid.vertices.push_back({a, b, 0});
          solid.vertices.push_back({b, 0, a});
        }
      }
      break;
    }
  }
  solid.edges = detail::nearest_neighbor_edges(solid.vertices);
  return solid;
}

// Index of vertex within kEps of p, or -1. Throws if two vertices match.
inline int snap_to_vertex(const std::vector<Vec3>& vertices, const Vec3& p) {
  int found = -1;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (nearly_equal(vertices[i], p, kEps)) {
      if (found >= 0) {
        throw ClosureFailure("snap_to_vertex: two vertices within kEps of image");
      }
      found = i;
    }
  }
  return found;
}

inline int find_edge(const std::vector<std::pair<int, int>>& edges, int a, int b) {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
  if (it == edges.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - edges.begin());
}

}  // namespace polypoly
