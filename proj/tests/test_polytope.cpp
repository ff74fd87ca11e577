#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "shapes.hpp"
#include "skelat/polytope.hpp"

using namespace skelat;

namespace {

std::set<IntVec> normal_set(const LatticePolytope& p) {
  std::set<IntVec> s;
  for (const FacetInequality& f : p.facets()) s.insert(f.normal);
  return s;
}

std::set<IntVec> vertex_set(const LatticePolytope& p) {
  return {p.vertices().begin(), p.vertices().end()};
}

}  // namespace

TEST_CASE("build_polytope drops non-vertices") {
  const auto p = LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}, {0, 0}});
  CHECK(p.vertices() == std::vector<IntVec>{{-1, -1}, {0, 1}, {1, 0}});
}

TEST_CASE("build_polytope keeps all cube corners") {
  const auto p = shapes::cube(3);
  CHECK(p.vertices().size() == 8);
  CHECK(p.dim() == 3);
}

TEST_CASE("build_polytope rejects degenerate input") {
  CHECK_THROWS_AS(LatticePolytope::from_points({{0, 0}, {1, 1}, {2, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatticePolytope::from_points({{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(LatticePolytope::from_points({}), std::invalid_argument);
  CHECK_THROWS_AS(LatticePolytope::from_points({{1, 0}, {0, 1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("facets of the reflexive triangle") {
  const auto p = shapes::p2_triangle();
  REQUIRE(p.facets().size() == 3);
  CHECK(normal_set(p) == std::set<IntVec>{{-1, -1}, {2, -1}, {-1, 2}});
  for (const FacetInequality& f : p.facets()) CHECK(f.rhs == -1);
}

TEST_CASE("facets of square and cube") {
  const auto sq = shapes::square();
  CHECK(normal_set(sq) == std::set<IntVec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  for (const FacetInequality& f : sq.facets()) CHECK(f.rhs == -1);

  const auto c = shapes::cube(3);
  REQUIRE(c.facets().size() == 6);
  for (const FacetInequality& f : c.facets()) {
    CHECK(f.rhs == -1);
    Int nonzero = 0;
    for (Int x : f.normal) nonzero += (x != 0);
    CHECK(nonzero == 1);
  }
}

TEST_CASE("face lattice counts match Euler data") {
  const auto sq = shapes::square();
  CHECK(sq.face_lattice().by_dim[0].size() == 4);
  CHECK(sq.face_lattice().by_dim[1].size() == 4);
  CHECK(sq.face_lattice().by_dim[2].size() == 1);

  const auto c = shapes::cube(3);
  CHECK(c.face_lattice().by_dim[0].size() == 8);
  CHECK(c.face_lattice().by_dim[1].size() == 12);
  CHECK(c.face_lattice().by_dim[2].size() == 6);
  CHECK(c.face_lattice().by_dim[3].size() == 1);
}

TEST_CASE("edge interior points of the big triangle") {
  const auto p = shapes::big_triangle();
  // Edge y = -1 runs from (-1,-1) to (2,-1); its relative interior holds
  // (0,-1) and (1,-1).
  bool found = false;
  for (const Face& e : p.face_lattice().by_dim[1]) {
    if (e.relint_points == std::vector<IntVec>{{0, -1}, {1, -1}}) found = true;
  }
  CHECK(found);
}

TEST_CASE("lattice point enumeration") {
  const auto tri = shapes::p2_triangle();
  CHECK(tri.interior_points() == std::vector<IntVec>{{0, 0}});
  CHECK(tri.boundary_points().size() == 3);

  const auto big = shapes::big_triangle();
  CHECK(big.interior_points() == std::vector<IntVec>{{0, 0}});
  CHECK(big.boundary_points().size() == 9);

  const auto sq = shapes::square();
  CHECK(sq.interior_points() == std::vector<IntVec>{{0, 0}});
  CHECK(sq.boundary_points().size() == 8);
}

TEST_CASE("is_reflexive") {
  CHECK(is_reflexive(shapes::p2_triangle()));
  CHECK(is_reflexive(shapes::cube(3)));
  const auto scaled =
      LatticePolytope::from_points({{2, 0}, {0, 2}, {-2, -2}});
  CHECK(!is_reflexive(scaled));
}

TEST_CASE("dual of the reflexive triangle") {
  const auto d = dual(shapes::p2_triangle());
  CHECK(vertex_set(d) == std::set<IntVec>{{-1, -1}, {2, -1}, {-1, 2}});
}

TEST_CASE("dual of the square is the cross-polytope") {
  const auto d = dual(shapes::square());
  CHECK(vertex_set(d) == std::set<IntVec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("dual of the 4d cross-polytope is the 4-cube") {
  const auto d = dual(shapes::cross_polytope(4));
  CHECK(d.vertices() == shapes::cube(4).vertices());
}

TEST_CASE("dual rejects non-reflexive input") {
  const auto scaled = LatticePolytope::from_points({{2, 0}, {0, 2}, {-2, -2}});
  CHECK_THROWS_AS(dual(scaled), std::domain_error);
}

TEST_CASE("products") {
  const auto seg = shapes::segment();
  const auto sq = product(seg, seg);
  CHECK(sq.vertices() == shapes::square().vertices());

  const auto box = product(shapes::square(), seg);
  CHECK(box.vertices() == shapes::cube(3).vertices());
  CHECK(is_reflexive(box));

  const auto mixed = product(shapes::big_triangle(), shapes::p2_triangle());
  CHECK(mixed.dim() == 4);
  CHECK(is_reflexive(mixed));
  // Product facet normals are the factor normals padded with zeros.
  for (const FacetInequality& f : mixed.facets()) {
    const bool first_zero = f.normal[0] == 0 && f.normal[1] == 0;
    const bool second_zero = f.normal[2] == 0 && f.normal[3] == 0;
    CHECK(first_zero != second_zero);
  }
}

TEST_CASE("unimodular equivalence") {
  const auto tri = shapes::p2_triangle();
  const auto id = unimodular_equivalent(tri, tri);
  REQUIRE(id.has_value());
  CHECK(*id == identity_matrix(2));

  const auto same = LatticePolytope::from_points({{0, 1}, {1, 0}, {-1, -1}});
  const auto id2 = unimodular_equivalent(tri, same);
  REQUIRE(id2.has_value());
  CHECK(*id2 == identity_matrix(2));

  CHECK(!unimodular_equivalent(tri, shapes::square()).has_value());

  // Shear image of the square: x -> x + y, y -> y.
  const auto sq = shapes::square();
  const auto sheared = LatticePolytope::from_points({{2, 1}, {0, -1}, {0, 1}, {-2, -1}});
  const auto t = unimodular_equivalent(sq, sheared);
  REQUIRE(t.has_value());
  std::set<IntVec> image;
  for (const IntVec& v : sq.vertices()) image.insert(mat_apply(*t, v));
  CHECK(image == vertex_set(sheared));

  CHECK_THROWS_AS(unimodular_equivalent(shapes::cube(4), shapes::cube(4)),
                  std::invalid_argument);
}

TEST_CASE("property: dual is an involution on reflexive samples") {
  for (const auto& p : {shapes::p2_triangle(), shapes::big_triangle(),
                        shapes::square(), shapes::cube(3),
                        shapes::cross_polytope(3), shapes::standard_simplex(3)}) {
    const auto dd = dual(dual(p));
    CHECK(dd.vertices() == p.vertices());
    // Facet/vertex duality both ways.
    CHECK(normal_set(dual(p)) == vertex_set(p));
    CHECK(vertex_set(dual(p)) == normal_set(p));
  }
}

TEST_CASE("property: boundary points partition into face relative interiors") {
  for (const auto& p : {shapes::big_triangle(), shapes::cube(3),
                        shapes::standard_simplex(3), dual(shapes::standard_simplex(3))}) {
    std::vector<IntVec> assigned;
    const auto& fl = p.face_lattice();
    for (int d = 0; d < p.dim(); ++d)
      for (const Face& f : fl.by_dim[d])
        assigned.insert(assigned.end(), f.relint_points.begin(), f.relint_points.end());
    std::sort(assigned.begin(), assigned.end());
    CHECK(assigned == p.boundary_points());
    // No duplicates: sizes already match the deduplicated boundary list.
    CHECK(std::adjacent_find(assigned.begin(), assigned.end()) == assigned.end());

    // The assigned face dimension agrees with the tight-normal rank formula.
    for (int d = 0; d < p.dim(); ++d)
      for (const Face& f : fl.by_dim[d])
        for (const IntVec& pt : f.relint_points) {
          const auto bi = p.boundary_index(pt);
          REQUIRE(bi.has_value());
          CHECK(p.min_face_dim(*bi) == d);
        }
  }
}

TEST_CASE("property: reflexive interior is exactly the origin") {
  for (const auto& p : {shapes::p2_triangle(), shapes::big_triangle(),
                        shapes::square(), shapes::cube(3),
                        shapes::cross_polytope(4)}) {
    REQUIRE(is_reflexive(p));
    CHECK(p.interior_points() == std::vector<IntVec>{IntVec(p.dim(), 0)});
  }
}
