#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "polypoly/common.hpp"

namespace polypoly {

// A permutation of {0..n-1}; images[i] is the image of point i.
struct Perm {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }
  bool operator==(const Perm& other) const { return images == other.images; }
  bool operator<(const Perm& other) const { return images < other.images; }
};

inline Perm identity_perm(int n) {
  Perm p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

inline bool is_identity(const Perm& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p.images[i] != i) return false;
  }
  return true;
}

inline bool is_bijection(const Perm& p) {
  std::vector<char> seen(p.images.size(), 0);
  for (int v : p.images) {
    if (v < 0 || v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// (a ∘ b)(i) = a(b(i)): apply b first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r;
  r.images.resize(a.images.size());
  for (int i = 0; i < b.size(); ++i) r.images[i] = a.images[b.images[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r;
  r.images.resize(p.images.size());
  for (int i = 0; i < p.size(); ++i) r.images[p.images[i]] = i;
  return r;
}

inline int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (!is_identity(q)) {
    q = compose(p, q);
    ++k;
    if (k > 1000) throw Error("perm_order: did not cycle within 1000 steps");
  }
  return k;
}

// Cycle lengths, sorted ascending (fixed points included as 1-cycles).
inline std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<char> seen(p.images.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    do {
      seen[j] = 1;
      j = p.images[j];
      ++len;
    } while (j != i);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline int cycle_count(const Perm& p) {
  return static_cast<int>(cycle_lengths(p).size());
}

}  // namespace polypoly
