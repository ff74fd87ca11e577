#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact integer linear algebra over Z^n: Hermite and Smith normal forms,
// canonical sublattice bases, membership certificates and quotient
// invariants.  All arithmetic is 64-bit with overflow checks; an overflow
// throws std::overflow_error instead of wrapping.

namespace skelat {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major; all rows the same length

// ---- checked scalar arithmetic ------------------------------------------

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

// ---- vectors and matrices ------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(Int c, const IntVec& a);
IntVec vec_neg(const IntVec& a);
bool is_zero_vec(const IntVec& a);

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& v);
IntMat transpose(const IntMat& a);

/// Throws std::invalid_argument unless a is nonempty and rectangular.
void require_rectangular(const IntMat& a, const char* who);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(IntMat a);

/// Rank over Q of an integer matrix.
std::size_t matrix_rank(const IntMat& a);

/// v divided by the gcd of its entries; throws std::invalid_argument on the
/// zero vector.  The result has content 1 and the same direction as v.
IntVec primitive(const IntVec& v);

// ---- normal forms ----------------------------------------------------------

/// Row-style Hermite normal form: u * a = h with |det u| = 1, pivots
/// positive, entries above each pivot reduced into [0, pivot), and all rows
/// below `rank` zero.  The nonzero rows of h are the canonical basis of the
/// row lattice of a.
struct HermiteForm {
  IntMat h;
  IntMat u;
  std::size_t rank = 0;
};

HermiteForm hnf(const IntMat& a);

/// Smith normal form: u * a * v = d with u, v unimodular and d diagonal with
/// nonnegative entries d1 | d2 | ... .
struct SmithForm {
  IntMat d;
  IntMat u;
  IntMat v;
};

SmithForm snf(const IntMat& a);

// ---- sublattices -----------------------------------------------------------

/// A sublattice of Z^n in canonical Hermite-basis form.  Two Sublattice
/// values compare equal iff they describe the same lattice.
struct Sublattice {
  std::size_t ambient_dim = 0;
  IntMat basis;  // rank many rows, row-style HNF of any generating set

  std::size_t rank() const { return basis.size(); }
  bool operator==(const Sublattice&) const = default;

  static Sublattice full(std::size_t n);
  static Sublattice zero(std::size_t n);
};

/// Canonical sublattice spanned by the given generators.  Empty generator
/// lists yield the zero lattice.
Sublattice lattice_from_generators(const std::vector<IntVec>& gens,
                                   std::size_t ambient_dim);

/// [Z^n : L], or nullopt when the sublattice has less than full rank.
std::optional<Int> lattice_index(const Sublattice& sub);

/// Integer coefficients c with c * basis = v, or nullopt when v is not in
/// the lattice.  Exact either way.
std::optional<IntVec> lattice_membership(const Sublattice& sub, const IntVec& v);

/// Whether a is a sublattice of b (same ambient dimension required).
bool lattice_contains(const Sublattice& outer, const Sublattice& inner);

// ---- finitely generated abelian groups -------------------------------------

/// Isomorphism invariants of a finitely generated abelian group:
/// Z^free_rank + Z/t1 + Z/t2 + ... with t1 | t2 | ... and every ti > 1.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariants of Z^n / sub.
AbelianInvariants quotient_invariants(const Sublattice& sub);

/// Invariants of Z^ambient / span(gens); gens need not be independent.
AbelianInvariants quotient_by_generators(const std::vector<IntVec>& gens,
                                         std::size_t ambient_dim);

// ---- formatting ------------------------------------------------------------

std::string to_string(const IntVec& v);                 // "(1,0,-2)"
std::string to_string(const AbelianInvariants& g);      // "[2,4]" or "Z^1+[2]"

}  // namespace skelat
