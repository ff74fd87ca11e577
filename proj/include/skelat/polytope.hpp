#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "skelat/int_linalg.hpp"

// Full-dimensional lattice polytopes in low dimension, with exact facet
// descriptions, face lattices and lattice point enumeration.  Hulls are
// computed by brute force over vertex subsets with integer determinants;
// inputs are expected to stay at desk scale (dimension <= 6, a few dozen
// points).

namespace skelat {

/// Halfspace <normal, x> >= rhs with primitive inner normal.
struct FacetInequality {
  IntVec normal;
  Int rhs = 0;

  bool operator==(const FacetInequality&) const = default;
  bool operator<(const FacetInequality& o) const {
    return normal != o.normal ? normal < o.normal : rhs < o.rhs;
  }
};

/// A face of the polytope: the intersection of the facets listed in
/// `facets`, spanned by the vertices listed in `vertices` (indices into the
/// polytope's vertex list).  `relint_points` are the lattice points lying in
/// the relative interior of this face; for the top face these are the
/// interior points of P.
struct Face {
  int dim = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> facets;
  std::vector<IntVec> relint_points;
};

/// All faces grouped by dimension 0..n.  Every boundary lattice point of P
/// appears in the relint_points of exactly one face.
struct FaceLattice {
  std::vector<std::vector<Face>> by_dim;
};

class LatticePolytope {
 public:
  /// Convex hull of the given points.  Throws std::invalid_argument unless
  /// the points affinely span their ambient space.  Vertices are stored in
  /// lexicographic order; interior points, boundary points, facet
  /// incidences and the face lattice are computed here and cached.
  static LatticePolytope from_points(const std::vector<IntVec>& points);

  int dim() const { return dim_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }
  const std::vector<IntVec>& interior_points() const { return interior_; }
  const std::vector<IntVec>& boundary_points() const { return boundary_; }
  const FaceLattice& face_lattice() const { return faces_; }

  bool contains(const IntVec& p) const;

  /// Indices of facets tight at p (empty for interior points).
  std::vector<std::size_t> tight_facets(const IntVec& p) const;

  /// Position of p in boundary_points(), if p is a boundary lattice point.
  std::optional<std::size_t> boundary_index(const IntVec& p) const;

  /// Dimension of the smallest face containing boundary point index i:
  /// n minus the rank of the normals tight at the point.
  int min_face_dim(std::size_t boundary_idx) const { return min_face_dim_[boundary_idx]; }

  const std::vector<std::size_t>& boundary_tight(std::size_t boundary_idx) const {
    return boundary_tight_[boundary_idx];
  }

  bool operator==(const LatticePolytope& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_;
  }

 private:
  LatticePolytope() = default;

  int dim_ = 0;
  std::vector<IntVec> vertices_;
  std::vector<FacetInequality> facets_;
  std::vector<IntVec> interior_;
  std::vector<IntVec> boundary_;
  std::vector<std::vector<std::size_t>> boundary_tight_;
  std::vector<int> min_face_dim_;
  std::map<IntVec, std::size_t> boundary_lookup_;
  FaceLattice faces_;
};

/// True iff every facet lies at lattice distance one from the origin, i.e.
/// all inequalities read <normal, x> >= -1 with primitive normal.  The
/// origin is then the unique interior lattice point.
bool is_reflexive(const LatticePolytope& p);

/// The dual polytope; its vertices are the facet normals of p.
/// Throws std::domain_error unless p is reflexive.
LatticePolytope dual(const LatticePolytope& p);

/// Cartesian product; vertices are all concatenations (v, w).
LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q);

/// A unimodular matrix T with T(vertices of p) = vertices of q as sets, or
/// nullopt if none exists.  Supported for dim <= 3 only (throws otherwise).
std::optional<IntMat> unimodular_equivalent(const LatticePolytope& p,
                                            const LatticePolytope& q);

}  // namespace skelat
