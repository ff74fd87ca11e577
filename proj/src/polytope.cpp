#include "skelat/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace skelat {

namespace {

// Determinant of d with column `skip` removed; d has exactly one more
// column than rows.  The 0x0 determinant is 1.
Int minor_det(const IntMat& d, std::size_t skip) {
  if (d.empty()) return 1;
  IntMat m(d.size(), IntVec(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t jj = 0;
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      if (j == skip) continue;
      m[i][jj++] = d[i][j];
    }
  }
  return determinant(m);
}

// Normal of the hyperplane spanned by the given n points (generalized cross
// product of their differences).  Zero when the points are affinely
// dependent.
IntVec hyperplane_normal(const std::vector<IntVec>& pts) {
  const std::size_t n = pts[0].size();
  IntMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.push_back(vec_sub(pts[i], pts[0]));
  IntVec eta(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Int m = minor_det(diffs, j);
    eta[j] = (j % 2 == 0) ? m : checked_neg(m);
  }
  return eta;
}

// adj(a)[i][j] = (-1)^(i+j) det(a minus row j minus column i), so that
// a * adj(a) = det(a) * I.
IntMat adjugate(const IntMat& a) {
  const std::size_t n = a.size();
  IntMat adj(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMat m;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(a[r][c]);
        m.push_back(row);
      }
      const Int d = m.empty() ? 1 : determinant(m);
      adj[i][j] = ((i + j) % 2 == 0) ? d : checked_neg(d);
    }
  return adj;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(const std::vector<IntVec>& points) {
  if (points.empty())
    throw std::invalid_argument("build_polytope: no points");
  const std::size_t n = points[0].size();
  if (n == 0)
    throw std::invalid_argument("build_polytope: zero-dimensional points");
  for (const IntVec& p : points)
    if (p.size() != n)
      throw std::invalid_argument("build_polytope: dimension mismatch");

  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  {
    IntMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
      diffs.push_back(vec_sub(pts[i], pts[0]));
    if (diffs.empty() || matrix_rank(diffs) != n)
      throw std::invalid_argument("build_polytope: points are not full-dimensional");
  }

  // Supporting hyperplanes through n-subsets; every facet contains n
  // affinely independent input points, so this search is complete.
  std::set<FacetInequality> facet_set;
  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<IntVec> sub;
    sub.reserve(n);
    for (std::size_t i : idx) sub.push_back(pts[i]);
    IntVec eta = hyperplane_normal(sub);
    if (!is_zero_vec(eta)) {
      const Int v0 = dot(eta, sub[0]);
      bool all_ge = true, all_le = true;
      for (const IntVec& p : pts) {
        const Int val = dot(eta, p);
        if (val < v0) all_ge = false;
        if (val > v0) all_le = false;
        if (!all_ge && !all_le) break;
      }
      if (all_ge || all_le) {
        if (!all_ge) eta = vec_neg(eta);  // orient inward
        const IntVec prim = primitive(eta);
        facet_set.insert({prim, dot(prim, sub[0])});
      }
    }
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < n; ++i) idx[i] = idx[i - 1] + 1;
  }

  LatticePolytope poly;
  poly.dim_ = static_cast<int>(n);
  poly.facets_.assign(facet_set.begin(), facet_set.end());

  // A point is a vertex iff its tight normals span the whole space.
  for (const IntVec& p : pts) {
    IntMat tight;
    for (const FacetInequality& f : poly.facets_)
      if (dot(f.normal, p) == f.rhs) tight.push_back(f.normal);
    if (!tight.empty() && matrix_rank(tight) == n) poly.vertices_.push_back(p);
  }

  // Lattice points by bounding box scan.
  IntVec lo = poly.vertices_[0], hi = poly.vertices_[0];
  for (const IntVec& v : poly.vertices_)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  IntVec cur = lo;
  while (true) {
    bool inside = true, on_boundary = false;
    for (const FacetInequality& f : poly.facets_) {
      const Int val = dot(f.normal, cur);
      if (val < f.rhs) {
        inside = false;
        break;
      }
      if (val == f.rhs) on_boundary = true;
    }
    if (inside) (on_boundary ? poly.boundary_ : poly.interior_).push_back(cur);
    std::size_t j = 0;
    while (j < n && cur[j] == hi[j]) cur[j] = lo[j], ++j;
    if (j == n) break;
    ++cur[j];
  }
  std::sort(poly.interior_.begin(), poly.interior_.end());
  std::sort(poly.boundary_.begin(), poly.boundary_.end());

  for (std::size_t i = 0; i < poly.boundary_.size(); ++i) {
    const IntVec& p = poly.boundary_[i];
    std::vector<std::size_t> tight;
    IntMat normals;
    for (std::size_t f = 0; f < poly.facets_.size(); ++f)
      if (dot(poly.facets_[f].normal, p) == poly.facets_[f].rhs) {
        tight.push_back(f);
        normals.push_back(poly.facets_[f].normal);
      }
    poly.min_face_dim_.push_back(static_cast<int>(n - matrix_rank(normals)));
    poly.boundary_tight_.push_back(std::move(tight));
    poly.boundary_lookup_[p] = i;
  }

  // Face lattice: vertex sets closed under intersection with facets.
  const std::size_t nf = poly.facets_.size();
  std::vector<std::vector<std::size_t>> facet_verts(nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t vi = 0; vi < poly.vertices_.size(); ++vi)
      if (dot(poly.facets_[f].normal, poly.vertices_[vi]) == poly.facets_[f].rhs)
        facet_verts[f].push_back(vi);

  std::set<std::vector<std::size_t>> family;
  std::queue<std::vector<std::size_t>> work;
  std::vector<std::size_t> all(poly.vertices_.size());
  std::iota(all.begin(), all.end(), 0);
  family.insert(all);
  work.push(all);
  for (const auto& fv : facet_verts)
    if (family.insert(fv).second) work.push(fv);
  while (!work.empty()) {
    const auto s = work.front();
    work.pop();
    for (const auto& fv : facet_verts) {
      std::vector<std::size_t> inter;
      std::set_intersection(s.begin(), s.end(), fv.begin(), fv.end(),
                            std::back_inserter(inter));
      if (!inter.empty() && family.insert(inter).second) work.push(inter);
    }
  }

  poly.faces_.by_dim.assign(n + 1, {});
  std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> locate;
  for (const auto& vs : family) {
    Face face;
    face.vertices = vs;
    IntMat diffs;
    for (std::size_t i = 1; i < vs.size(); ++i)
      diffs.push_back(vec_sub(poly.vertices_[vs[i]], poly.vertices_[vs[0]]));
    face.dim = diffs.empty() ? 0 : static_cast<int>(matrix_rank(diffs));
    for (std::size_t f = 0; f < nf; ++f)
      if (std::includes(facet_verts[f].begin(), facet_verts[f].end(), vs.begin(),
                        vs.end()))
        face.facets.push_back(f);
    poly.faces_.by_dim[face.dim].push_back(std::move(face));
  }
  for (std::size_t d = 0; d <= n; ++d) {
    auto& layer = poly.faces_.by_dim[d];
    std::sort(layer.begin(), layer.end(),
              [](const Face& a, const Face& b) { return a.vertices < b.vertices; });
    for (std::size_t i = 0; i < layer.size(); ++i)
      locate[layer[i].vertices] = {d, i};
  }

  // Assign each boundary lattice point to the face it is interior to: the
  // intersection of the facets tight at the point.
  for (std::size_t i = 0; i < poly.boundary_.size(); ++i) {
    std::vector<std::size_t> vs = all;
    for (std::size_t f : poly.boundary_tight_[i]) {
      std::vector<std::size_t> inter;
      std::set_intersection(vs.begin(), vs.end(), facet_verts[f].begin(),
                            facet_verts[f].end(), std::back_inserter(inter));
      vs = std::move(inter);
    }
    const auto [d, pos] = locate.at(vs);
    poly.faces_.by_dim[d][pos].relint_points.push_back(poly.boundary_[i]);
  }
  for (const IntVec& p : poly.interior_)
    poly.faces_.by_dim[n].back().relint_points.push_back(p);

  return poly;
}

bool LatticePolytope::contains(const IntVec& p) const {
  for (const FacetInequality& f : facets_)
    if (dot(f.normal, p) < f.rhs) return false;
  return true;
}

std::vector<std::size_t> LatticePolytope::tight_facets(const IntVec& p) const {
  std::vector<std::size_t> tight;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (dot(facets_[f].normal, p) == facets_[f].rhs) tight.push_back(f);
  return tight;
}

std::optional<std::size_t> LatticePolytope::boundary_index(const IntVec& p) const {
  const auto it = boundary_lookup_.find(p);
  if (it == boundary_lookup_.end()) return std::nullopt;
  return it->second;
}

bool is_reflexive(const LatticePolytope& p) {
  for (const FacetInequality& f : p.facets())
    if (f.rhs != -1) return false;
  return true;
}

LatticePolytope dual(const LatticePolytope& p) {
  if (!is_reflexive(p))
    throw std::domain_error("dual: polytope is not reflexive");
  std::vector<IntVec> verts;
  for (const FacetInequality& f : p.facets()) verts.push_back(f.normal);
  return LatticePolytope::from_points(verts);
}

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<IntVec> verts;
  for (const IntVec& v : p.vertices())
    for (const IntVec& w : q.vertices()) {
      IntVec vw = v;
      vw.insert(vw.end(), w.begin(), w.end());
      verts.push_back(vw);
    }
  return LatticePolytope::from_points(verts);
}

std::optional<IntMat> unimodular_equivalent(const LatticePolytope& p,
                                            const LatticePolytope& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("unimodular_equivalent: dimension mismatch");
  const std::size_t n = static_cast<std::size_t>(p.dim());
  if (n > 3)
    throw std::invalid_argument("unimodular_equivalent: dimension > 3 unsupported");
  if (p.vertices().size() != q.vertices().size()) return std::nullopt;
  if (p.vertices() == q.vertices()) return identity_matrix(n);

  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  const std::set<IntVec> q_set(qv.begin(), qv.end());

  // Anchor: first linearly independent n-tuple of vertices of p.
  std::vector<std::size_t> anchor;
  {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      IntMat rows;
      for (std::size_t i : idx) rows.push_back(pv[i]);
      if (matrix_rank(rows) == n) {
        anchor = idx;
        break;
      }
      std::size_t k = n;
      while (k > 0 && idx[k - 1] == pv.size() - n + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  if (anchor.empty()) return std::nullopt;

  IntMat a_cols(n, IntVec(n));  // anchor vertices as columns
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a_cols[i][j] = pv[anchor[j]][i];
  const Int det_a = determinant(a_cols);
  const IntMat adj_a = adjugate(a_cols);

  // Try every ordered n-tuple of distinct vertices of q as images.
  std::vector<std::size_t> pick(n, 0);
  std::vector<bool> used(qv.size(), false);
  IntMat best;
  auto try_tuple = [&](const std::vector<std::size_t>& tuple) -> bool {
    IntMat b_cols(n, IntVec(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) b_cols[i][j] = qv[tuple[j]][i];
    const IntMat num = mat_mul(b_cols, adj_a);  // = T * det_a
    IntMat t(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (num[i][j] % det_a != 0) return false;
        t[i][j] = num[i][j] / det_a;
      }
    const Int dt = determinant(t);
    if (dt != 1 && dt != -1) return false;
    for (const IntVec& v : pv)
      if (!q_set.count(mat_apply(t, v))) return false;
    best = t;
    return true;
  };
  std::vector<std::size_t> tuple;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return try_tuple(tuple);
    for (std::size_t i = 0; i < qv.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(i);
      if (self(self, depth + 1)) return true;
      tuple.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (search(search, 0)) return best;
  return std::nullopt;
}

}  // namespace skelat
