#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "shapes.hpp"
#include "skelat/skeleton.hpp"

using namespace skelat;

TEST_CASE("k_skeleton_points on the square") {
  const auto sq = shapes::square();
  CHECK(k_skeleton_points(sq, 0) ==
        std::vector<IntVec>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  CHECK(k_skeleton_points(sq, 1).size() == 8);
  CHECK(k_skeleton_points(sq, 2).size() == 9);  // adds the origin
  CHECK_THROWS_AS(k_skeleton_points(sq, 3), std::invalid_argument);
  CHECK_THROWS_AS(k_skeleton_points(sq, -1), std::invalid_argument);
}

TEST_CASE("cube 1-skeleton consists of the 20 edge points") {
  const auto pts = k_skeleton_points(shapes::cube(3), 1);
  CHECK(pts.size() == 20);
  for (const IntVec& p : pts) {
    int extreme = 0;
    for (Int x : p) extreme += (x == 1 || x == -1);
    CHECK(extreme >= 2);
  }
}

TEST_CASE("k_skeleton_points agrees with the face lattice route") {
  for (const auto& p : {shapes::big_triangle(), shapes::cube(3),
                        dual(shapes::standard_simplex(3)),
                        product(shapes::square(), shapes::segment())}) {
    const auto& fl = p.face_lattice();
    for (int k = 0; k < p.dim(); ++k) {
      std::vector<IntVec> expect;
      for (int d = 0; d <= k; ++d)
        for (const Face& f : fl.by_dim[d])
          expect.insert(expect.end(), f.relint_points.begin(), f.relint_points.end());
      std::sort(expect.begin(), expect.end());
      CHECK(k_skeleton_points(p, k) == expect);
    }
  }
}

TEST_CASE("lambda_k of the square") {
  const auto sq = shapes::square();
  const auto l0 = lambda_k(sq, 0);
  CHECK(l0.lattice.basis == IntMat{{1, 1}, {0, 2}});
  CHECK(lattice_index(l0.lattice) == 2);
  CHECK(lambda_k(sq, 1).lattice == Sublattice::full(2));
}

TEST_CASE("lambda_0 of the big triangle has index 3") {
  const auto l0 = lambda_k(shapes::big_triangle(), 0);
  CHECK(l0.lattice.basis == IntMat{{1, 1}, {0, 3}});
  CHECK(lattice_index(l0.lattice) == 3);
}

TEST_CASE("quotient invariants of skeleton lattices") {
  CHECK(quotient_M_mod_lambda(shapes::square(), 0) == AbelianInvariants{0, {2}});
  CHECK(quotient_M_mod_lambda(shapes::square(), 2).trivial());
  CHECK(quotient_M_mod_lambda(shapes::cube(3), 3).trivial());

  const auto simplex_dual = dual(shapes::standard_simplex(3));
  CHECK(quotient_M_mod_lambda(simplex_dual, 0) == AbelianInvariants{0, {4, 4}});
  CHECK(quotient_M_mod_lambda(simplex_dual, 1).trivial());
}

TEST_CASE("roots of small polytopes") {
  CHECK(roots(shapes::p2_triangle()).roots.empty());

  const auto rs = roots(shapes::big_triangle());
  CHECK(rs.roots.size() == 6);
  std::set<IntVec> pts;
  for (const Root& r : rs.roots) pts.insert(r.point);
  CHECK(pts == std::set<IntVec>{{0, -1}, {1, -1}, {-1, 0}, {-1, 1}, {1, 0}, {0, 1}});

  const auto cube_roots = roots(shapes::cube(3));
  std::set<IntVec> centers;
  for (const Root& r : cube_roots.roots) centers.insert(r.point);
  CHECK(centers == std::set<IntVec>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                    {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

TEST_CASE("roots agree with facet relative interiors from the face lattice") {
  for (const auto& p : {shapes::big_triangle(), shapes::cube(3),
                        product(shapes::big_triangle(), shapes::segment())}) {
    std::vector<IntVec> via_faces;
    for (const Face& f : p.face_lattice().by_dim[p.dim() - 1])
      via_faces.insert(via_faces.end(), f.relint_points.begin(),
                       f.relint_points.end());
    std::sort(via_faces.begin(), via_faces.end());
    std::vector<IntVec> via_roots;
    for (const Root& r : roots(p).roots) via_roots.push_back(r.point);
    std::sort(via_roots.begin(), via_roots.end());
    CHECK(via_roots == via_faces);
  }
}

TEST_CASE("root pairing with its own facet normal is -1") {
  for (const auto& p : {shapes::big_triangle(), shapes::cube(3),
                        product(shapes::square(), shapes::square())}) {
    for (const Root& r : roots(p).roots) {
      CHECK(dot(r.normal, r.point) == -1);
      CHECK(p.boundary_tight(*p.boundary_index(r.point)).size() == 1);
    }
  }
}

TEST_CASE("orthogonal pairs") {
  const auto big = shapes::big_triangle();
  CHECK(is_orthogonal_pair(big, {0, -1}, {-1, 0}));
  // x + y lands on both facets.
  const auto rs = roots(big);
  const IntVec sum = vec_add({0, -1}, {-1, 0});
  CHECK(dot(rs.find({0, -1})->normal, sum) == -1);
  CHECK(dot(rs.find({-1, 0})->normal, sum) == -1);

  CHECK(!is_orthogonal_pair(big, {0, -1}, {1, -1}));  // common facet

  const auto c = shapes::cube(3);
  CHECK(is_orthogonal_pair(c, {1, 0, 0}, {0, 1, 0}));
  CHECK_THROWS_AS(is_orthogonal_pair(c, {1, 0, 0}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("property: orthogonal root sums lie on both facets") {
  for (const auto& p : {shapes::big_triangle(), shapes::cube(3)}) {
    const auto rs = roots(p);
    for (const Root& x : rs.roots)
      for (const Root& y : rs.roots) {
        if (x.point == y.point) continue;
        if (dot(x.normal, y.point) != 0 || dot(y.normal, x.point) != 0) continue;
        const IntVec sum = vec_add(x.point, y.point);
        CHECK(p.contains(sum));
        CHECK(dot(x.normal, sum) == -1);
        CHECK(dot(y.normal, sum) == -1);
      }
  }
}

TEST_CASE("property: skeleton lattices are monotone and top-stable") {
  for (const auto& p : {shapes::square(), shapes::big_triangle(), shapes::cube(3),
                        shapes::cross_polytope(3), dual(shapes::standard_simplex(3)),
                        product(shapes::big_triangle(), shapes::segment())}) {
    const int n = p.dim();
    for (int k = 0; k < n; ++k)
      CHECK(lattice_contains(lambda_k(p, k + 1).lattice, lambda_k(p, k).lattice));
    CHECK(lambda_k(p, n - 1).lattice == lambda_k(p, n).lattice);
    CHECK(lambda_k(p, n - 1).lattice == Sublattice::full(n));  // n = 2, 3 here
  }
}

TEST_CASE("property: index equals torsion product for skeleton quotients") {
  for (const auto& p : {shapes::square(), shapes::big_triangle(),
                        dual(shapes::standard_simplex(3))}) {
    for (int k = 0; k <= p.dim(); ++k) {
      const auto lat = lambda_k(p, k).lattice;
      const auto idx = lattice_index(lat);
      REQUIRE(idx.has_value());
      const auto q = quotient_invariants(lat);
      CHECK(q.free_rank == 0);
      Int prod = 1;
      for (Int t : q.torsion) prod *= t;
      CHECK(prod == *idx);
    }
  }
}

TEST_CASE("exterior square quotients") {
  CHECK(exterior_square_quotient(3, Sublattice::full(3)).trivial());
  CHECK(exterior_square_quotient(2, lattice_from_generators({{1, 1}, {0, 2}}, 2))
            .trivial());

  const Sublattice two_z3 =
      lattice_from_generators({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 3);
  CHECK(exterior_square_quotient(3, two_z3) == AbelianInvariants{0, {2, 2, 2}});
}

TEST_CASE("torsion_dual") {
  CHECK(torsion_dual(AbelianInvariants{}).trivial());
  CHECK(torsion_dual(AbelianInvariants{0, {2}}) == AbelianInvariants{0, {2}});
  CHECK(torsion_dual(AbelianInvariants{0, {4, 4}}) == AbelianInvariants{0, {4, 4}});
  CHECK_THROWS_AS(torsion_dual(AbelianInvariants{1, {}}), std::domain_error);
}

TEST_CASE("mirror torsion check on constructible 4d polytopes") {
  const auto cube4 = shapes::cube(4);
  const auto r1 = mirror_torsion_check(cube4);
  CHECK(r1.primal.trivial());
  CHECK(r1.mirror.trivial());
  CHECK(r1.equal);

  const auto sq2 = product(shapes::square(), shapes::square());
  const auto r2 = mirror_torsion_check(sq2);
  CHECK(r2.primal.trivial());
  CHECK(r2.mirror.trivial());
  CHECK(r2.equal);

  const auto r3 = mirror_torsion_check(shapes::cross_polytope(4));
  CHECK(r3.equal);

  CHECK_THROWS_AS(mirror_torsion_check(shapes::cube(3)), std::invalid_argument);
}
