#pragma once

#include <stdexcept>
#include <string>

namespace polypoly {

// Tolerance for every floating-point comparison in the library. Geometry is
// only trusted up to vertex snapping; everything downstream of a snap is
// exact integer permutation arithmetic, so error cannot accumulate.
inline constexpr double kEps = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Snapping a rotated vertex found zero or several candidates within kEps.
struct ClosureFailure : Error {
  using Error::Error;
};

// The group has no element of the requested rotation order.
struct NoSuchAxes : Error {
  using Error::Error;
};

// A candidate stabilizer set is not closed under composition/inverse.
struct NotASubgroup : Error {
  using Error::Error;
};

// An enumeration guard was exceeded.
struct TooLarge : Error {
  using Error::Error;
};

// Two axes tie for the minimal |dot| within the selection margin.
struct AmbiguousAxis : Error {
  using Error::Error;
};

// Backtracking search found no way to partition the edge set.
struct NoDecomposition : Error {
  using Error::Error;
};

// No stabilizer of the declared order contains the required generator.
struct NoSuchSubgroup : Error {
  using Error::Error;
};

// A coloring's domain does not match the model's edge set.
struct SizeMismatch : Error {
  using Error::Error;
};

}  // namespace polypoly
