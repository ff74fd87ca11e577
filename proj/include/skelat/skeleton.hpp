#pragma once

#include <vector>

#include "skelat/int_linalg.hpp"
#include "skelat/polytope.hpp"

// Skeleton lattices of reflexive polytopes and their quotient invariants,
// Demazure roots, and the exterior-square torsion computation.

namespace skelat {

/// A lattice point in the relative interior of a facet, together with that
/// facet's index and primitive inner normal eta (so <eta, point> = -1).
struct Root {
  IntVec point;
  std::size_t facet = 0;
  IntVec normal;

  bool operator==(const Root&) const = default;
};

struct RootSet {
  std::vector<Root> roots;

  const Root* find(const IntVec& point) const;
};

/// Lambda_k: the sublattice generated by all lattice points on faces of
/// dimension <= k.
struct SkeletonLattice {
  int k = 0;
  Sublattice lattice;
  std::vector<IntVec> generators;
};

/// All lattice points on faces of dimension <= k (for k = n this also
/// includes the interior points).  Requires a reflexive polytope and
/// 0 <= k <= n.
std::vector<IntVec> k_skeleton_points(const LatticePolytope& p, int k);

SkeletonLattice lambda_k(const LatticePolytope& p, int k);

/// Invariants of M / Lambda_k = Z^n / lambda_k(p, k).
AbelianInvariants quotient_M_mod_lambda(const LatticePolytope& p, int k);

/// The Demazure roots of p: lattice points interior to facets.
RootSet roots(const LatticePolytope& p);

/// Roots x, y are orthogonal when <eta_x, y> = 0 = <eta_y, x>.  Both inputs
/// must be roots of p.
bool is_orthogonal_pair(const LatticePolytope& p, const IntVec& x, const IntVec& y);

/// Invariants of wedge^2 Z^n / (Z^n wedge sub), computed in the C(n,2)
/// dimensional lattice with basis e_i ^ e_j (i < j, lexicographic).
AbelianInvariants exterior_square_quotient(std::size_t n, const Sublattice& sub);

/// The Q/Z-dual of a finite abelian group has the same invariants; this is
/// a named identity so that reports can state which side of an isomorphism
/// is a Hom-dual.  Throws std::domain_error when free_rank != 0.
AbelianInvariants torsion_dual(const AbelianInvariants& g);

/// Both sides of the torsion isomorphism for a 4-dimensional reflexive
/// polytope: M / Lambda_2(P) against wedge^2 N / (N wedge Lambda_1(P*)).
struct MirrorCheckReport {
  AbelianInvariants primal;   // M / Lambda_2(P)
  AbelianInvariants mirror;   // wedge^2 N / (N wedge Lambda_1(P*))
  bool equal = false;
};

MirrorCheckReport mirror_torsion_check(const LatticePolytope& p);

}  // namespace skelat
