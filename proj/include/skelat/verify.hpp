#pragma once

#include <string>
#include <vector>

#include "skelat/int_linalg.hpp"
#include "skelat/polytope.hpp"
#include "skelat/skeleton.hpp"
#include "skelat/structure.hpp"

// End-to-end verification for a reflexive polytope: quotient invariants of
// every skeleton lattice, the codimension-two equality Lambda_{n-2} =
// Lambda_{n-1} (which must hold for n >= 3), explicit membership
// certificates expressing each root over the (n-2)-skeleton points, and the
// pair-classification suite.

namespace skelat {

/// An exact witness that `root` lies in the lattice spanned by the listed
/// skeleton points: sum of coefficient[i] * generator[i] equals root.
struct RootCertificate {
  IntVec root;
  std::vector<IntVec> generators;  // only those with nonzero coefficient
  IntVec coefficients;
  bool operator==(const RootCertificate&) const = default;
};

struct VerificationReport {
  std::string id;
  int n = 0;
  bool reflexive = false;
  std::vector<AbelianInvariants> quotients;        // M / Lambda_k, k = 0..n
  std::vector<std::optional<Int>> lattice_indices; // [M : Lambda_k], k = 0..n
  bool codim2_equal = false;   // Lambda_{n-2} == Lambda_{n-1}
  bool top_equal = false;      // Lambda_{n-1} == Lambda_n
  bool generates_M = false;    // Lambda_{n-1} == M
  std::size_t root_count = 0;
  std::vector<RootCertificate> certificates;       // one per root when n >= 3
  LemmaSuiteReport lemma;
  // Set on a codimension-two failure for n >= 3 (it would contradict the
  // verified theorem); carries the vertex list so the case is reproducible.
  std::string violation;

  bool passed() const { return violation.empty() && lemma.passed(); }
  bool operator==(const VerificationReport&) const = default;
};

/// Full report for a reflexive polytope.  For n = 2 a false codim2 flag is
/// expected for three polygon classes and is not a failure.
/// Throws std::domain_error when p is not reflexive.
VerificationReport verify_theorem(const LatticePolytope& p, std::string id = "");

/// Certificate for a single root over the (n-2)-skeleton points; requires
/// n >= 3.  A membership failure would be a counterexample to the verified
/// theorem and raises std::logic_error with the polytope echoed.
RootCertificate root_certificate(const LatticePolytope& p, const IntVec& root);

struct CorpusEntry {
  std::string id;
  LatticePolytope polytope;
};

/// Deterministic verification corpus.  max_dim = 2: the 16 polygon classes;
/// 3 adds cube, cross-polytope, simplex, its dual and all polygon x segment
/// products; 4 adds their 4-dimensional counterparts and all 136 unordered
/// polygon x polygon products.
std::vector<CorpusEntry> standard_corpus(int max_dim);

}  // namespace skelat
