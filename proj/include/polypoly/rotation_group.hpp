#pragma once

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <vector>

#include "polypoly/perm.hpp"
#include "polypoly/solid.hpp"
#include "polypoly/vec3.hpp"

namespace polypoly {

// The full proper rotation group of a solid. Element 0 is the identity.
// Matrices carry the geometry; the parallel vertex permutations carry the
// exact algebra (multiplication table, inverses, induced edge action).
struct RotationGroup {
  std::vector<Mat3> matrices;
  std::vector<Perm> vertex_perms;
  std::vector<Perm> edge_perms;
  std::vector<std::vector<int>> mult;  // mult[g][h] = index of g∘h
  std::vector<int> inv;                // inv[g] = index of g⁻¹

  int order() const { return static_cast<int>(matrices.size()); }
};

struct RotationAxis {
  Vec3 direction;       // unit, canonical sign
  int fold = 0;         // k ≥ 2
  int generator_index;  // rotation by exactly 2π/k about +direction
};

namespace detail {

inline Perm vertex_perm_of_matrix(const Solid& solid, const Mat3& m) {
  Perm p;
  p.images.reserve(solid.vertices.size());
  for (const Vec3& v : solid.vertices) {
    const int idx = snap_to_vertex(solid.vertices, mat3_apply(m, v));
    if (idx < 0) {
      throw ClosureFailure("vertex image does not land on a vertex");
    }
    p.images.push_back(idx);
  }
  if (!is_bijection(p)) {
    throw ClosureFailure("vertex image map is not a bijection");
  }
  return p;
}

inline Perm edge_perm_of_vertex_perm(const Solid& solid, const Perm& vp) {
  Perm p;
  p.images.reserve(solid.edges.size());
  for (const auto& [a, b] : solid.edges) {
    const int e = find_edge(solid.edges, vp(a), vp(b));
    if (e < 0) throw ClosureFailure("edge image is not an edge");
    p.images.push_back(e);
  }
  return p;
}

inline std::vector<Mat3> group_generators(SolidKind kind) {
  using std::numbers::pi;
  switch (kind) {
    case SolidKind::tetrahedron:
      return {rotation_about({1, 1, 1}, 2 * pi / 3),
              rotation_about({1, -1, -1}, 2 * pi / 3)};
    case SolidKind::cube:
      return {rotation_about({0, 0, 1}, pi / 2),
              rotation_about({1, 1, 1}, 2 * pi / 3)};
    case SolidKind::dodecahedron: {
      const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
      return {rotation_about({0, phi, 1}, 2 * pi / 5),
              rotation_about({1, 1, 1}, 2 * pi / 3)};
    }
  }
  throw Error("unknown solid kind");
}

}  // namespace detail

// Close the generator matrices under multiplication, keyed by the vertex
// permutation. A revisit whose matrix disagrees with the stored one would
// mean the vertex representation is not faithful, so it is checked.
inline RotationGroup rotation_group(const Solid& solid) {
  RotationGroup group;
  std::map<Perm, int> index_of;

  const auto add_element = [&](const Mat3& m) -> int {
    const Perm vp = detail::vertex_perm_of_matrix(solid, m);
    const auto it = index_of.find(vp);
    if (it != index_of.end()) {
      if (!mat3_nearly_equal(group.matrices[it->second], m, 1e-7)) {
        throw ClosureFailure("two distinct matrices share a vertex permutation");
      }
      return -1;
    }
    const int idx = group.order();
    index_of.emplace(vp, idx);
    group.matrices.push_back(m);
    group.vertex_perms.push_back(vp);
    group.edge_perms.push_back(detail::edge_perm_of_vertex_perm(solid, vp));
    return idx;
  };

  add_element(mat3_identity());
  std::deque<int> frontier = {0};
  const std::vector<Mat3> gens = detail::group_generators(solid.kind);
  for (const Mat3& g : gens) {
    const int idx = add_element(g);
    if (idx >= 0) frontier.push_back(idx);
  }
  while (!frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    for (const Mat3& g : gens) {
      const int next = add_element(mat3_mul(group.matrices[idx], g));
      if (next >= 0) frontier.push_back(next);
      if (group.order() > 60) {
        throw ClosureFailure("closure exceeded order 60");
      }
    }
  }

  const int n = group.order();
  group.mult.assign(n, std::vector<int>(n, -1));
  group.inv.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const Perm gh = compose(group.vertex_perms[g], group.vertex_perms[h]);
      const auto it = index_of.find(gh);
      if (it == index_of.end()) throw ClosureFailure("product escapes the group");
      group.mult[g][h] = it->second;
      if (it->second == 0) group.inv[g] = h;
    }
    if (group.inv[g] < 0) throw ClosureFailure("element without inverse");
  }
  return group;
}

inline std::map<int, int> element_order_histogram(const RotationGroup& group) {
  std::map<int, int> histogram;
  for (const Perm& p : group.vertex_perms) ++histogram[perm_order(p)];
  return histogram;
}

namespace detail {

// Fixed axis of a rotation matrix. For a half-turn the antisymmetric part
// vanishes, but R + I = 2uuᵀ, so any nonzero column of R + I works.
inline Vec3 rotation_axis_of(const Mat3& m, int fold) {
  if (fold == 2) {
    Vec3 best{};
    double best_norm = -1.0;
    for (int c = 0; c < 3; ++c) {
      const Vec3 col = {m[c] + (c == 0 ? 1.0 : 0.0), m[3 + c] + (c == 1 ? 1.0 : 0.0),
                        m[6 + c] + (c == 2 ? 1.0 : 0.0)};
      if (norm(col) > best_norm) {
        best_norm = norm(col);
        best = col;
      }
    }
    return normalized(best);
  }
  return normalized({m[7] - m[5], m[2] - m[6], m[3] - m[1]});
}

}  // namespace detail

// One axis per antipodal pair of fixed points, ordered by direction, each
// paired with the group element rotating by exactly 2π/fold about it.
inline std::vector<RotationAxis> rotation_axes(const RotationGroup& group, int fold) {
  if (fold < 2) throw NoSuchAxes("fold must be at least 2");
  std::vector<RotationAxis> axes;
  for (int g = 0; g < group.order(); ++g) {
    if (perm_order(group.vertex_perms[g]) != fold) continue;
    const Mat3& m = group.matrices[g];
    const Vec3 dir = canonical_sign(detail::rotation_axis_of(m, fold));

    // Keep only the rotation by +2π/fold about the canonical direction.
    const double want_trace = 1.0 + 2.0 * std::cos(2.0 * std::numbers::pi / fold);
    if (std::abs(mat3_trace(m) - want_trace) > 1e-7) continue;
    if (fold > 2) {
      const Vec3 antisym = {m[7] - m[5], m[2] - m[6], m[3] - m[1]};
      if (dot(antisym, dir) < 0.0) continue;
    }

    bool known = false;
    for (const RotationAxis& axis : axes) {
      if (nearly_equal(axis.direction, dir, 1e-7)) {
        known = true;
        break;
      }
    }
    if (!known) axes.push_back({dir, fold, g});
  }
  if (axes.empty()) throw NoSuchAxes("group has no elements of the requested fold");
  std::sort(axes.begin(), axes.end(), [](const RotationAxis& a, const RotationAxis& b) {
    if (std::abs(a.direction.x - b.direction.x) > kEps) return a.direction.x < b.direction.x;
    if (std::abs(a.direction.y - b.direction.y) > kEps) return a.direction.y < b.direction.y;
    return a.direction.z < b.direction.z;
  });
  return axes;
}

}  // namespace polypoly
