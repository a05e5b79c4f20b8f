#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "polypoly/perm.hpp"
#include "polypoly/rotation_group.hpp"

namespace polypoly {

// A permutation action of a group on a point set: one permutation per group
// element, indexed like the group's element list.
struct GroupAction {
  int group_order = 0;
  std::vector<Perm> perms;

  int point_count() const { return perms.empty() ? 0 : perms[0].size(); }
};

// An abstract counting instance: the action of a group on the left cosets of
// a stabilizer subgroup.
struct CosetScheme {
  std::vector<int> stabilizer;  // element indices forming the subgroup H
  std::vector<int> coset_rep;   // point -> representative element index
  GroupAction action;           // on the |G|/|H| cosets
};

inline GroupAction make_action(std::vector<Perm> perms) {
  GroupAction action;
  action.group_order = static_cast<int>(perms.size());
  action.perms = std::move(perms);
  if (action.perms.empty()) throw Error("empty action");
  const int n = action.perms[0].size();
  bool has_identity = false;
  for (const Perm& p : action.perms) {
    if (p.size() != n || !is_bijection(p)) throw Error("action contains a non-permutation");
    has_identity = has_identity || is_identity(p);
  }
  if (!has_identity) throw Error("action lacks the identity permutation");
  return action;
}

// perm(g·h) = perm(g)∘perm(h) for every pair, against the group's table.
inline bool action_respects_composition(const GroupAction& action,
                                        const std::vector<std::vector<int>>& mult) {
  const int n = action.group_order;
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (!(action.perms[mult[g][h]] == compose(action.perms[g], action.perms[h]))) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_subgroup(const RotationGroup& group, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  const std::set<int> member(elements.begin(), elements.end());
  if (!member.count(0)) return false;
  for (int g : elements) {
    if (!member.count(group.inv[g])) return false;
    for (int h : elements) {
      if (!member.count(group.mult[g][h])) return false;
    }
  }
  return true;
}

// Powers of one element.
inline std::vector<int> cyclic_subgroup(const RotationGroup& group, int element) {
  std::vector<int> elements = {0};
  int g = element;
  while (g != 0) {
    elements.push_back(g);
    g = group.mult[g][element];
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

// Elements mapping the line through `direction` to itself.
inline std::vector<int> line_stabilizer(const RotationGroup& group, const Vec3& direction) {
  std::vector<int> elements;
  for (int g = 0; g < group.order(); ++g) {
    const Vec3 image = mat3_apply(group.matrices[g], direction);
    if (nearly_equal(image, direction, 1e-7) ||
        nearly_equal(image, {-direction.x, -direction.y, -direction.z}, 1e-7)) {
      elements.push_back(g);
    }
  }
  return elements;
}

// Left-coset action of the group on cosets of the given subgroup. Cosets are
// numbered by their smallest representative's element index, ascending, so
// coset 0 is the subgroup itself.
inline CosetScheme coset_action(const RotationGroup& group, const std::vector<int>& stabilizer) {
  if (!is_subgroup(group, stabilizer)) {
    throw NotASubgroup("stabilizer set is not a subgroup");
  }
  CosetScheme scheme;
  scheme.stabilizer = stabilizer;
  std::sort(scheme.stabilizer.begin(), scheme.stabilizer.end());

  const int order = group.order();
  std::vector<int> coset_of(order, -1);
  for (int g = 0; g < order; ++g) {
    if (coset_of[g] >= 0) continue;
    const int id = static_cast<int>(scheme.coset_rep.size());
    scheme.coset_rep.push_back(g);
    for (int h : stabilizer) coset_of[group.mult[g][h]] = id;
  }
  const int n = static_cast<int>(scheme.coset_rep.size());
  if (n * static_cast<int>(stabilizer.size()) != order) {
    throw NotASubgroup("cosets do not tile the group");
  }

  std::vector<Perm> perms;
  perms.reserve(order);
  for (int a = 0; a < order; ++a) {
    Perm p;
    p.images.reserve(n);
    for (int point = 0; point < n; ++point) {
      p.images.push_back(coset_of[group.mult[a][scheme.coset_rep[point]]]);
    }
    perms.push_back(std::move(p));
  }
  scheme.action = make_action(std::move(perms));
  return scheme;
}

inline std::vector<int> stabilizer_of_point(const GroupAction& action, int point) {
  std::vector<int> elements;
  for (int g = 0; g < action.group_order; ++g) {
    if (action.perms[g](point) == point) elements.push_back(g);
  }
  return elements;
}

inline std::vector<int> orbit_of_point(const GroupAction& action, int point) {
  std::set<int> orbit = {point};
  std::vector<int> frontier = {point};
  while (!frontier.empty()) {
    const int p = frontier.back();
    frontier.pop_back();
    for (const Perm& perm : action.perms) {
      if (orbit.insert(perm(p)).second) frontier.push_back(perm(p));
    }
  }
  return {orbit.begin(), orbit.end()};
}

}  // namespace polypoly
