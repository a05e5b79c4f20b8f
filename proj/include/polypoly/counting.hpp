#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "polypoly/group_action.hpp"

namespace polypoly {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline BigInt int_pow(BigInt base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Orbit count of injective n-color labelings of the n points: a rainbow
// labeling is fixed by g exactly when g fixes every point, contributing n!.
inline BigInt burnside_rainbow_count(const GroupAction& action) {
  const int n = action.point_count();
  BigInt total = 0;
  for (const Perm& p : action.perms) {
    if (is_identity(p)) total += factorial(n);
  }
  if (total % action.group_order != 0) throw Error("Burnside sum not divisible by group order");
  return total / action.group_order;
}

// Orbit count of all k-colorings of the points: g fixes k^cycles(g) of them.
inline BigInt burnside_kcolor_count(const GroupAction& action, int k) {
  BigInt total = 0;
  for (const Perm& p : action.perms) total += int_pow(k, cycle_count(p));
  if (total % action.group_order != 0) throw Error("Burnside sum not divisible by group order");
  return total / action.group_order;
}

// One row of the Burnside sum, grouped by cycle type on the points.
struct BurnsideTerm {
  std::string cycle_type;   // e.g. "1^2 2^2"
  int element_count = 0;
  BigInt fixed_per_element; // fixed labelings per element of this type
};

inline std::string cycle_type_string(const Perm& p) {
  std::map<int, int> mult;
  for (int len : cycle_lengths(p)) ++mult[len];
  std::ostringstream out;
  bool first = true;
  for (const auto& [len, count] : mult) {
    if (!first) out << ' ';
    out << len << '^' << count;
    first = false;
  }
  return out.str();
}

inline std::vector<BurnsideTerm> burnside_rainbow_terms(const GroupAction& action) {
  const int n = action.point_count();
  std::map<std::string, BurnsideTerm> by_type;
  for (const Perm& p : action.perms) {
    const std::string type = cycle_type_string(p);
    auto& term = by_type[type];
    term.cycle_type = type;
    term.element_count += 1;
    term.fixed_per_element = is_identity(p) ? factorial(n) : BigInt(0);
  }
  std::vector<BurnsideTerm> terms;
  for (auto& [type, term] : by_type) terms.push_back(term);
  return terms;
}

inline constexpr long long kLabelingGuard = 10'000'000;

// All n! labelings assigning n distinct colors, lexicographic.
inline std::vector<std::vector<int>> all_rainbow_labelings(int n) {
  BigInt count = factorial(n);
  if (count > kLabelingGuard) throw TooLarge("rainbow labeling set exceeds guard");
  std::vector<int> labeling(n);
  for (int i = 0; i < n; ++i) labeling[i] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(labeling);
  } while (std::next_permutation(labeling.begin(), labeling.end()));
  return all;
}

// All k^n labelings with colors in {0..k-1}, lexicographic.
inline std::vector<std::vector<int>> all_kcolor_labelings(int n, int k) {
  BigInt count = int_pow(k, n);
  if (count > kLabelingGuard) throw TooLarge("k-color labeling set exceeds guard");
  std::vector<std::vector<int>> all;
  std::vector<int> labeling(n, 0);
  for (;;) {
    all.push_back(labeling);
    int i = n - 1;
    while (i >= 0 && labeling[i] == k - 1) {
      labeling[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++labeling[i];
  }
  return all;
}

// g moves a labeling by relocating colors along the point permutation:
// (g·L)[g(p)] = L[p].
inline std::vector<int> apply_to_labeling(const Perm& p, const std::vector<int>& labeling) {
  std::vector<int> moved(labeling.size());
  for (int i = 0; i < p.size(); ++i) moved[p(i)] = labeling[i];
  return moved;
}

namespace detail {

struct LabelingHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// Partition an explicit labeling set into orbits. The set must be closed
// under the action.
inline long long orbit_enum_count(const GroupAction& action,
                                  const std::vector<std::vector<int>>& labelings) {
  if (static_cast<long long>(labelings.size()) > kLabelingGuard) {
    throw TooLarge("labeling set exceeds guard");
  }
  std::unordered_map<std::vector<int>, int, detail::LabelingHash> index;
  index.reserve(labelings.size() * 2);
  for (int i = 0; i < static_cast<int>(labelings.size()); ++i) {
    index.emplace(labelings[i], i);
  }
  std::vector<char> seen(labelings.size(), 0);
  long long orbits = 0;
  std::vector<int> stack;
  for (int start = 0; start < static_cast<int>(labelings.size()); ++start) {
    if (seen[start]) continue;
    ++orbits;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (const Perm& p : action.perms) {
        const auto moved = apply_to_labeling(p, labelings[cur]);
        const auto it = index.find(moved);
        if (it == index.end()) throw Error("labeling set is not closed under the action");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

}  // namespace polypoly
