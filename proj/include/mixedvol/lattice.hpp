#pragma once

#include <gmpxx.h>

#include <vector>

#include "mixedvol/qlinalg.hpp"

namespace mixedvol {

// Exact convex geometry over the integer lattice.  All coordinates are
// arbitrary-precision integers and every predicate is evaluated over the
// rationals, so degenerate configurations need no special treatment.
// Values are immutable after construction and every operation is a pure
// function; concurrent use needs no coordination.

using Point = std::vector<Int>;

constexpr int kMaxDim = 6;

struct LatticePolytope {
  int dim = 0;                     // ambient dimension
  std::vector<Point> generators;   // deduplicated, sorted
  std::vector<Point> vertices;     // minimal hull vertex set, sorted

  // Convex hull of a non-empty point set; the vertex set is the unique
  // minimal subset with the same hull.
  static LatticePolytope from_points(int dim, std::vector<Point> pts);
};

LatticePolytope convex_hull(int dim, const std::vector<Point>& pts);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

LatticePolytope dilate(const LatticePolytope& p, const Int& k);

LatticePolytope translate(const LatticePolytope& p, const Point& v);

// Dimension of the affine hull.
int affine_rank(int dim, const std::vector<Point>& pts);

// n! * (n-dimensional volume); zero when the affine hull is lower
// dimensional.  Keeping the factorial inside keeps the value integral.
Int volume_scaled(const LatticePolytope& p);

Rat euclidean_volume(const LatticePolytope& p);

// True when all points lie on a common affine hyperplane of the ambient
// space (the situation of point sets coming from equal-degree monomials).
bool on_common_hyperplane(int dim, const std::vector<Point>& pts);

// Volume of the hull measured against a fundamental domain of the lattice
// generated by the pairwise differences of the points; always an integer
// (the leading Ehrhart coefficient times r!).
Int lattice_normalized_volume(int dim, const std::vector<Point>& pts);

struct PolytopeTuple {
  int dim = 0;
  std::vector<LatticePolytope> polytopes;
};

// Alternating-sum route: sum over the nonempty subsets H of the tuple of
// (-1)^(n-|H|) vol(sum of the polytopes in H).
Rat mixed_volume_ie(const PolytopeTuple& t);

// Interpolation route: fit the homogeneous degree-n polynomial
// vol(l_1 Q_1 + ... + l_n Q_n) on an exact unisolvent node set and read off
// the coefficient of l_1 * ... * l_n.  A held-out node validates the fit.
Rat mixed_volume_interp(const PolytopeTuple& t);

// Convenience wrapper around mixed_volume_ie with integrality enforced
// (mixed volumes of lattice polytopes are integers).
Int mixed_volume(const PolytopeTuple& t);

}  // namespace mixedvol
