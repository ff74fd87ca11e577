#include "skelat/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "skelat/polygon_enum.hpp"

namespace skelat {

namespace {

std::string echo_vertices(const LatticePolytope& p) {
  std::string s;
  for (const IntVec& v : p.vertices()) s += to_string(v);
  return s;
}

// Certificates for all roots at once: one HNF of the (n-2)-skeleton points
// is shared, and the basis coefficients are pulled back to the original
// generators through the transform rows.
std::vector<RootCertificate> make_certificates(const LatticePolytope& p,
                                               const std::vector<IntVec>& skeleton_pts,
                                               const RootSet& rs) {
  std::vector<RootCertificate> certs;
  if (rs.roots.empty()) return certs;
  const HermiteForm hf = hnf(skeleton_pts);
  Sublattice lat;
  lat.ambient_dim = skeleton_pts[0].size();
  lat.basis.assign(hf.h.begin(), hf.h.begin() + static_cast<std::ptrdiff_t>(hf.rank));

  for (const Root& r : rs.roots) {
    const auto basis_coeff = lattice_membership(lat, r.point);
    if (!basis_coeff)
      throw std::logic_error(
          "root_certificate: root " + to_string(r.point) +
          " is outside the codimension-2 skeleton lattice of " + echo_vertices(p));
    // coefficient over generator j: sum_i basis_coeff[i] * u[i][j]
    RootCertificate cert;
    cert.root = r.point;
    for (std::size_t j = 0; j < skeleton_pts.size(); ++j) {
      Int c = 0;
      for (std::size_t i = 0; i < basis_coeff->size(); ++i)
        c = checked_add(c, checked_mul((*basis_coeff)[i], hf.u[i][j]));
      if (c != 0) {
        cert.generators.push_back(skeleton_pts[j]);
        cert.coefficients.push_back(c);
      }
    }
    IntVec back(lat.ambient_dim, 0);
    for (std::size_t j = 0; j < cert.generators.size(); ++j)
      back = vec_add(back, vec_scale(cert.coefficients[j], cert.generators[j]));
    if (back != r.point)
      throw std::logic_error("root_certificate: certificate failed to re-evaluate");
    certs.push_back(std::move(cert));
  }
  return certs;
}

}  // namespace

VerificationReport verify_theorem(const LatticePolytope& p, std::string id) {
  if (!is_reflexive(p))
    throw std::domain_error("verify_theorem: polytope is not reflexive");
  const int n = p.dim();
  VerificationReport rep;
  rep.id = std::move(id);
  rep.n = n;
  rep.reflexive = true;

  std::vector<SkeletonLattice> lams;
  for (int k = 0; k <= n; ++k) {
    lams.push_back(lambda_k(p, k));
    rep.quotients.push_back(quotient_invariants(lams.back().lattice));
    rep.lattice_indices.push_back(lattice_index(lams.back().lattice));
  }
  rep.codim2_equal = n >= 2 && lams[n - 2].lattice == lams[n - 1].lattice;
  rep.top_equal = lams[n - 1].lattice == lams[n].lattice;
  rep.generates_M = lams[n - 1].lattice == Sublattice::full(n);

  const RootSet rs = roots(p);
  rep.root_count = rs.roots.size();
  if (n >= 3) {
    if (!rep.codim2_equal)
      rep.violation = "Lambda_{n-2} != Lambda_{n-1} for " + echo_vertices(p);
    else
      rep.certificates = make_certificates(p, lams[n - 2].generators, rs);
  }

  rep.lemma = verify_lemma_suite(p);
  return rep;
}

RootCertificate root_certificate(const LatticePolytope& p, const IntVec& root) {
  if (p.dim() < 3)
    throw std::invalid_argument("root_certificate: dimension must be at least 3");
  if (!is_reflexive(p))
    throw std::domain_error("root_certificate: polytope is not reflexive");
  const RootSet rs = roots(p);
  const Root* r = rs.find(root);
  if (!r)
    throw std::invalid_argument("root_certificate: input is not a root");
  RootSet single;
  single.roots.push_back(*r);
  return make_certificates(p, k_skeleton_points(p, p.dim() - 2), single)[0];
}

std::vector<CorpusEntry> standard_corpus(int max_dim) {
  if (max_dim < 2 || max_dim > 4)
    throw std::invalid_argument("standard_corpus: max_dim must be 2, 3 or 4");

  const auto polygons = enumerate_reflexive_polygons();
  auto polygon_id = [](std::size_t i) {
    return "p2-" + std::string(i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
  };

  std::vector<CorpusEntry> corpus;
  for (std::size_t i = 0; i < polygons.size(); ++i)
    corpus.push_back({polygon_id(i), polygons[i].representative});
  if (max_dim < 3) return corpus;

  auto cube = [](std::size_t n) {
    std::vector<IntVec> pts;
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      IntVec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i & 1) ? 1 : -1;
      pts.push_back(v);
    }
    return LatticePolytope::from_points(pts);
  };
  auto cross = [](std::size_t n) {
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec v(n, 0);
      v[i] = 1;
      pts.push_back(v);
      v[i] = -1;
      pts.push_back(v);
    }
    return LatticePolytope::from_points(pts);
  };
  auto simplex = [](std::size_t n) {
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec v(n, 0);
      v[i] = 1;
      pts.push_back(v);
    }
    pts.push_back(IntVec(n, -1));
    return LatticePolytope::from_points(pts);
  };
  const LatticePolytope segment = LatticePolytope::from_points({{-1}, {1}});

  corpus.push_back({"cube3", cube(3)});
  corpus.push_back({"cross3", cross(3)});
  corpus.push_back({"simplex3", simplex(3)});
  corpus.push_back({"dual-simplex3", dual(simplex(3))});
  for (std::size_t i = 0; i < polygons.size(); ++i)
    corpus.push_back(
        {polygon_id(i) + "xseg", product(polygons[i].representative, segment)});
  if (max_dim < 4) return corpus;

  corpus.push_back({"cube4", cube(4)});
  corpus.push_back({"cross4", cross(4)});
  corpus.push_back({"simplex4", simplex(4)});
  corpus.push_back({"dual-simplex4", dual(simplex(4))});
  for (std::size_t i = 0; i < polygons.size(); ++i)
    for (std::size_t j = i; j < polygons.size(); ++j)
      corpus.push_back({polygon_id(i) + "x" + polygon_id(j),
                        product(polygons[i].representative,
                                polygons[j].representative)});
  return corpus;
}

}  // namespace skelat
