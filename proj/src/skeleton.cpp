#include "skelat/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace skelat {

namespace {

void require_reflexive(const LatticePolytope& p, const char* who) {
  if (!is_reflexive(p))
    throw std::domain_error(std::string(who) + ": polytope is not reflexive");
}

}  // namespace

const Root* RootSet::find(const IntVec& point) const {
  for (const Root& r : roots)
    if (r.point == point) return &r;
  return nullptr;
}

std::vector<IntVec> k_skeleton_points(const LatticePolytope& p, int k) {
  require_reflexive(p, "k_skeleton_points");
  if (k < 0 || k > p.dim())
    throw std::invalid_argument("k_skeleton_points: k out of range");
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < p.boundary_points().size(); ++i)
    if (p.min_face_dim(i) <= k) pts.push_back(p.boundary_points()[i]);
  if (k == p.dim())
    pts.insert(pts.end(), p.interior_points().begin(), p.interior_points().end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

SkeletonLattice lambda_k(const LatticePolytope& p, int k) {
  SkeletonLattice s;
  s.k = k;
  s.generators = k_skeleton_points(p, k);
  s.lattice = lattice_from_generators(s.generators, p.dim());
  return s;
}

AbelianInvariants quotient_M_mod_lambda(const LatticePolytope& p, int k) {
  return quotient_invariants(lambda_k(p, k).lattice);
}

RootSet roots(const LatticePolytope& p) {
  require_reflexive(p, "roots");
  RootSet rs;
  for (std::size_t i = 0; i < p.boundary_points().size(); ++i) {
    const auto& tight = p.boundary_tight(i);
    if (tight.size() != 1) continue;
    rs.roots.push_back(
        {p.boundary_points()[i], tight[0], p.facets()[tight[0]].normal});
  }
  return rs;
}

bool is_orthogonal_pair(const LatticePolytope& p, const IntVec& x, const IntVec& y) {
  const RootSet rs = roots(p);
  const Root* rx = rs.find(x);
  const Root* ry = rs.find(y);
  if (!rx || !ry)
    throw std::invalid_argument("is_orthogonal_pair: input is not a root");
  return dot(rx->normal, y) == 0 && dot(ry->normal, x) == 0;
}

AbelianInvariants exterior_square_quotient(std::size_t n, const Sublattice& sub) {
  if (sub.ambient_dim != n)
    throw std::invalid_argument("exterior_square_quotient: ambient dimension mismatch");
  const std::size_t m = n * (n - 1) / 2;
  // Basis e_i ^ e_j for i < j in lexicographic order.
  auto pair_index = [n](std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (const IntVec& b : sub.basis) {
      // e_i ^ b, expanded with e_j ^ e_i = -(e_i ^ e_j).
      IntVec w(m, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || b[j] == 0) continue;
        if (i < j)
          w[pair_index(i, j)] = checked_add(w[pair_index(i, j)], b[j]);
        else
          w[pair_index(j, i)] = checked_sub(w[pair_index(j, i)], b[j]);
      }
      gens.push_back(std::move(w));
    }
  return quotient_by_generators(gens, m);
}

AbelianInvariants torsion_dual(const AbelianInvariants& g) {
  if (g.free_rank != 0)
    throw std::domain_error("torsion_dual: group has nonzero free rank");
  return g;
}

MirrorCheckReport mirror_torsion_check(const LatticePolytope& p) {
  if (p.dim() != 4)
    throw std::invalid_argument("mirror_torsion_check: polytope must be 4-dimensional");
  require_reflexive(p, "mirror_torsion_check");
  MirrorCheckReport rep;
  rep.primal = quotient_M_mod_lambda(p, 2);
  const LatticePolytope star = dual(p);
  const Sublattice lambda1_star = lambda_k(star, 1).lattice;
  rep.mirror = exterior_square_quotient(4, lambda1_star);
  rep.equal = torsion_dual(rep.primal) == rep.mirror;
  return rep;
}

}  // namespace skelat
