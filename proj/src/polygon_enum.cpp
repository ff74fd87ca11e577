#include "skelat/polygon_enum.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace skelat {

namespace {

struct P2 {
  Int x = 0, y = 0;
};

// All coordinates in the scan are bounded by the box, so plain 64-bit
// arithmetic below is exact.

Int cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain over lexicographically sorted input; strict turns, so
// collinear midpoints are dropped.  Returns the hull in counterclockwise
// order.  n <= 8.
std::size_t convex_hull(const P2* pts, std::size_t n, P2* hull) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  return k - 1;  // last point repeats the first
}

// Subset in lex order -> is it the vertex set of a reflexive polygon?
bool is_reflexive_vertex_set(const P2* pts, std::size_t s) {
  Int min_x = pts[0].x, max_x = pts[s - 1].x;
  Int min_y = pts[0].y, max_y = pts[0].y;
  for (std::size_t i = 1; i < s; ++i) {
    min_y = std::min(min_y, pts[i].y);
    max_y = std::max(max_y, pts[i].y);
  }
  if (min_x >= 0 || max_x <= 0 || min_y >= 0 || max_y <= 0) return false;

  P2 hull[9];
  if (convex_hull(pts, s, hull) != s) return false;

  for (std::size_t i = 0; i < s; ++i) {
    const P2& a = hull[i];
    const P2& b = hull[(i + 1) % s];
    // Inner normal of the counterclockwise edge a -> b.
    Int nx = a.y - b.y, ny = b.x - a.x;
    const Int g = std::gcd(nx < 0 ? -nx : nx, ny < 0 ? -ny : ny);
    nx /= g;
    ny /= g;
    if (nx * a.x + ny * a.y != -1) return false;
  }
  return true;
}

}  // namespace

std::vector<PolygonClass> enumerate_reflexive_polygons(Int box,
                                                       std::size_t max_vertices) {
  if (box < 1 || max_vertices < 3 || max_vertices > 8)
    throw std::invalid_argument("enumerate_reflexive_polygons: bad parameters");

  std::vector<P2> cand;
  for (Int x = -box; x <= box; ++x)
    for (Int y = -box; y <= box; ++y)
      if ((x != 0 || y != 0) && std::gcd(x < 0 ? -x : x, y < 0 ? -y : y) == 1)
        cand.push_back({x, y});
  const std::size_t m = cand.size();

  // The lex-least vertex of a polygon with interior origin has x < 0, so
  // the first subset index never reaches the x >= 0 tail.
  std::size_t first_limit = 0;
  while (first_limit < m && cand[first_limit].x < 0) ++first_limit;

  std::vector<LatticePolytope> reps;
  std::vector<std::vector<IntVec>> best;

  // Representatives minimize the largest coordinate magnitude first, then
  // the vertex list, over every embedding found in the box.
  auto rep_key = [](const std::vector<IntVec>& verts) {
    Int worst = 0;
    for (const IntVec& v : verts)
      for (Int c : v) worst = std::max(worst, c < 0 ? -c : c);
    return std::make_pair(worst, verts);
  };

  auto accept = [&](const P2* pts, std::size_t s) {
    std::vector<IntVec> verts;
    verts.reserve(s);
    for (std::size_t i = 0; i < s; ++i) verts.push_back({pts[i].x, pts[i].y});
    const LatticePolytope poly = LatticePolytope::from_points(verts);
    if (!is_reflexive(poly) || poly.vertices() != verts)
      throw std::logic_error("enumerate_reflexive_polygons: scan accepted a "
                             "set the hull machinery rejects");
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (best[i].size() != s) continue;
      if (unimodular_equivalent(reps[i], poly)) {
        if (rep_key(verts) < rep_key(best[i])) best[i] = verts;
        return;
      }
    }
    reps.push_back(poly);
    best.push_back(verts);
  };

  P2 sub[8];
  std::array<std::size_t, 8> idx{};
  for (std::size_t s = 3; s <= max_vertices; ++s) {
    if (m < s) break;
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      if (idx[0] >= first_limit) break;
      for (std::size_t i = 0; i < s; ++i) sub[i] = cand[idx[i]];
      if (is_reflexive_vertex_set(sub, s)) accept(sub, s);
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == m - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }

  std::vector<PolygonClass> classes;
  for (const auto& verts : best) {
    PolygonClass c{LatticePolytope::from_points(verts), verts.size(), 0};
    const auto idx0 = lattice_index(lattice_from_generators(verts, 2));
    c.lambda0_index = *idx0;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const PolygonClass& a, const PolygonClass& b) {
              if (a.vertex_count != b.vertex_count)
                return a.vertex_count < b.vertex_count;
              return a.representative.vertices() < b.representative.vertices();
            });
  return classes;
}

std::vector<PolygonClass> enumerate_reflexive_polygons() {
  return enumerate_reflexive_polygons(3, 6);
}

std::vector<PolygonClass> figure1_polygons() {
  std::vector<PolygonClass> out;
  for (PolygonClass& c : enumerate_reflexive_polygons())
    if (c.lambda0_index > 1) out.push_back(std::move(c));
  return out;
}

}  // namespace skelat
